//! Reference implementations for tests, written without reusing the library's
//! window or search code.

pub mod brute;
pub mod sample;
