//! Single structure constants in every type, in both tableau conventions.

use schubert_lr::lr_tableaux::Convention;
use schubert_lr::schubert_ring::structure_constant;
use schubert_lr::shapes::{AmbientSpace, Partition};

fn main() -> schubert_lr::error::Result<()> {
    let cases = [
        ("A:k=3,m=3", "2,1", "2,1", "3,2,1"),
        ("B:n=7", "5,3,1", "5,2", "6,5,4,1"),
        ("C:n=3", "1", "1", "2"),
        ("D:n=4", "2", "2", "3,1"),
    ];
    for (space, l, m, n) in cases {
        let space: AmbientSpace = space.parse()?;
        let (l, m, n): (Partition, Partition, Partition) = (l.parse()?, m.parse()?, n.parse()?);
        let dual_form = structure_constant(&l, &m, &n, &space, Convention::PaperForm)?;
        let standard = structure_constant(&l, &m, &n, &space, Convention::StandardForm)?;
        println!("{space}  {l} * {m} -> {n}: {dual_form} (standard form {standard})");
    }
    Ok(())
}
