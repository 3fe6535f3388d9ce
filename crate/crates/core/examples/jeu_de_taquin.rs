//! Moving a strip of holes across an LR tableau by ordinary slides, and back.

use schubert_lr::jdt::{crossing_violations, pieri_transfer, pieri_transfer_reverse};
use schubert_lr::lr_tableaux::enumerate_lr_any_content;
use schubert_lr::shapes::{dual_partition, Partition, SkewShape};

fn main() -> schubert_lr::error::Result<()> {
    let (k, m) = (3, 3);
    let lambda: Partition = "1".parse()?;
    let mu: Partition = "1".parse()?;
    let mu_tilde: Partition = "2,1".parse()?;
    let shape = SkewShape::young(dual_partition(&lambda, k, m)?, mu_tilde)?;
    for t in enumerate_lr_any_content(&shape).into_iter().take(3) {
        let fwd = pieri_transfer(&t, &mu, (k, m))?;
        println!("rows {:?} -> lambda~ = {}, rows {:?}", t.rows(), fwd.partition, fwd.tableau.rows());
        for trace in &fwd.traces {
            println!("  hole path {:?}", trace.path);
        }
        assert!(crossing_violations(&fwd.traces).is_empty());
        let back = pieri_transfer_reverse(&fwd.tableau, &lambda, (k, m))?;
        assert_eq!(back.tableau, t);
    }
    Ok(())
}
