//! Full products and Pieri products in the Schubert ring.

use schubert_lr::schubert_ring::SchubertRing;

fn main() -> schubert_lr::error::Result<()> {
    for space in ["A:k=2,m=3", "B:n=3", "C:n=3"] {
        let ring = SchubertRing::new(space.parse()?);
        let s1 = ring.element(&"1".parse()?)?;
        let s21 = ring.element(&"2,1".parse()?)?;
        println!("{space}");
        println!("  s[1] * s[2,1] = {}", ring.multiply(&s1, &s21)?);
        println!("  pieri p=1     = {}", ring.pieri_multiply(1, &s21)?);
        let square = ring.multiply(&s1, &s1)?;
        println!("  s[1]^3        = {}", ring.multiply(&square, &s1)?);
    }
    Ok(())
}
