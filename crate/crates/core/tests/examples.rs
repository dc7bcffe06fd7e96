macro_rules! example_test {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(exact_identities, "exact_identities.rs");
example_test!(sign_criterion, "sign_criterion.rs");
example_test!(special_functions, "special_functions.rs");
example_test!(sandwich_bounds, "sandwich_bounds.rs");
example_test!(replay_proof, "replay_proof.rs");
example_test!(theorem_sweep, "theorem_sweep.rs");
