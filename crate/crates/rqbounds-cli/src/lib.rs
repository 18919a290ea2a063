//! File formats and report rendering behind the `rqbounds` binary,
//! exposed as a library so the I/O round-trip contracts are testable.

pub mod json;
pub mod mtx;
