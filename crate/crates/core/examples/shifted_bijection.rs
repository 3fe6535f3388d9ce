//! The marked-hole bijection between NW-holed and SE-holed LRS tableaux.

use schubert_lr::shapes::{AmbientSpace, Partition, SkewShape};
use schubert_lr::shifted::{
    enumerate_hole_strips, enumerate_lrs_any_content, transfer_nw_to_se, transfer_se_to_nw,
    HoledTableau, Side,
};

fn main() -> schubert_lr::error::Result<()> {
    let n = 4;
    let space = AmbientSpace::type_b(n)?;
    let lambda: Partition = "1".parse()?;
    let mu: Partition = "1".parse()?;
    let outer = space.dual(&lambda)?;
    for strip in enumerate_hole_strips(&mu, 2, n, Side::Nw)? {
        if !outer.contains(&strip.outer) {
            continue;
        }
        let shape = SkewShape::shifted(outer.clone(), strip.outer.clone())?;
        for base in enumerate_lrs_any_content(&shape).into_iter().take(2) {
            let nw = HoledTableau::new(base, strip.clone(), Side::Nw)?;
            let se = transfer_nw_to_se(&nw)?;
            println!("{:?}", nw.display_rows());
            for t in &se.traces {
                println!("  {} -> {} along {:?}", t.before, t.after, t.slide.path);
            }
            println!("{:?}\n", se.result.display_rows());
            assert_eq!(transfer_se_to_nw(&se.result)?.result, nw);
        }
    }
    Ok(())
}
