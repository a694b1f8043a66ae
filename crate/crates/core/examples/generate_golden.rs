//! Regenerates golden/tail_sums.txt from the catalog's tail-sum oracle.
//!
//! Run from the crate directory:
//!
//! ```text
//! cargo run --example generate_golden
//! ```
//!
//! The table freezes reference remainder magnitudes used by the acceptance
//! suites; bump the version column when the generation recipe changes.

use fourier_circle::catalog;
use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;
use std::path::Path;

const TERMS: usize = 1_000_000;
const VERSION: u32 = 1;

fn main() {
    let mut out = String::new();
    out.push_str("# Reference remainder values from direct tail summation.\n");
    out.push_str("# columns: name n_terms theta value terms version\n");

    let sawtooth = catalog::find("sawtooth").unwrap();
    for n_terms in [8usize, 16, 32, 64] {
        let value = sawtooth.tail_sum(n_terms, FRAC_PI_2, TERMS);
        writeln!(
            out,
            "sawtooth {n_terms} {:.17e} {:.17e} {TERMS} {VERSION}",
            FRAC_PI_2, value
        )
        .unwrap();
    }

    let square = catalog::find("square").unwrap();
    let value = square.tail_sum(5, FRAC_PI_2, TERMS);
    writeln!(
        out,
        "square 5 {:.17e} {:.17e} {TERMS} {VERSION}",
        FRAC_PI_2, value
    )
    .unwrap();

    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden/tail_sums.txt");
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    std::fs::write(&path, &out).unwrap();
    println!("wrote {}", path.display());
    print!("{out}");
}
