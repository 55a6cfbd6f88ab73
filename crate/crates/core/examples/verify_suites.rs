//! Runs every consistency suite at small limits.

use affine_crystals::verify::{self, Limits, Suite};

fn main() {
    let limits = Limits { max_boxes: 8, ..Limits::default() };
    let mut ok = true;
    for suite in Suite::ALL {
        let report = verify::run(suite, &limits);
        println!("{report}");
        if let Some(c) = &report.counterexample {
            println!("  first counterexample: {c}");
        }
        ok &= report.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
