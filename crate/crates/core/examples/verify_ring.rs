//! Exhaustive ring-axiom check of one space, given as the first argument.

use schubert_lr::schubert_ring::verify_space;
use schubert_lr::shapes::AmbientSpace;

fn main() -> schubert_lr::error::Result<()> {
    let space: AmbientSpace = std::env::args().nth(1).unwrap_or_else(|| "B:n=4".into()).parse()?;
    let report = verify_space(&space);
    println!("{}: {} basis elements, {} violations", report.space, report.basis_size, report.violations.len());
    for v in &report.violations {
        println!("  {v}");
    }
    Ok(())
}
