pub mod catalogue;
pub mod cli;
pub mod digits;
pub mod exact;
pub mod proof;
pub mod sign;
pub mod special;
pub mod yang;
