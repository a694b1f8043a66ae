//! Runs every Rust code block in the guide as a doc-test.
//!
//! mdbook renders `book/` but cannot execute snippets against workspace
//! dependencies, so each chapter is also included here as module
//! documentation; `cargo test --doc -p fourier-circle-book` compiles and
//! runs all of its code fences. A failing test names the chapter module it
//! came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/grids-and-sampling.md")]
pub mod grids_and_sampling {}

#[doc = include_str!("../../../book/src/fourier-series.md")]
pub mod fourier_series {}

#[doc = include_str!("../../../book/src/hilbert-transform.md")]
pub mod hilbert_transform {}

#[doc = include_str!("../../../book/src/partial-sums-and-remainders.md")]
pub mod partial_sums_and_remainders {}

#[doc = include_str!("../../../book/src/convergence-diagnostics.md")]
pub mod convergence_diagnostics {}

#[doc = include_str!("../../../book/src/test-functions.md")]
pub mod test_functions {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
