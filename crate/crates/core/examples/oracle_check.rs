//! Tableau counts against coefficients read off symmetric polynomials.

use schubert_lr::lr_tableaux::{lr_coefficient, Convention};
use schubert_lr::oracle::{p_product_coefficient, schur_product_coefficient};
use schubert_lr::shapes::{AmbientSpace, Partition};
use schubert_lr::shifted::lrs_coefficient;

fn main() -> schubert_lr::error::Result<()> {
    let p = |s: &str| s.parse::<Partition>();
    let rect = AmbientSpace::type_a(3, 3)?;
    let (l, m, n) = (p("2,1")?, p("2,1")?, p("3,2,1")?);
    println!(
        "c = {} by tableaux, {} by Schur polynomials",
        lr_coefficient(&l, &m, &n, &rect, Convention::PaperForm)?,
        schur_product_coefficient(&l, &m, &n)
    );
    let (l, m, n) = (p("3,1")?, p("2")?, p("4,2")?);
    println!(
        "f = {} by tableaux, {} by P-polynomials",
        lrs_coefficient(&l, &m, &n, 4, Convention::StandardForm)?,
        p_product_coefficient(&l, &m, &n)
    );
    Ok(())
}
