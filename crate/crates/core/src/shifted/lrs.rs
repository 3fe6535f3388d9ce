use crate::error::{Error, Result};
use crate::lr_tableaux::Convention;
use crate::shapes::{AmbientSpace, Cell, Flavor, Partition, SkewShape};
use crate::tableau::SkewTableau;

use super::symbol::{is_lrs_word, MarkedSymbol};

/// Shifted tableau over the marked alphabet.
pub type MarkedTableau = SkewTableau<MarkedSymbol>;

/// Rows and columns weakly increase, no row repeats an `i'` and no column
/// repeats an `i`.
pub fn is_valid_marked(t: &MarkedTableau) -> bool {
    t.flavor() == Flavor::Shifted
        && t.entries().iter().all(|(&(r, c), &e)| {
            let row_ok = t
                .get((r, c + 1))
                .is_none_or(|right| e < right || (e == right && !e.marked));
            let col_ok = t
                .get((r + 1, c))
                .is_none_or(|below| e < below || (e == below && e.marked));
            row_ok && col_ok
        })
}

pub fn is_lrs_tableau(t: &MarkedTableau) -> bool {
    is_valid_marked(t) && is_lrs_word(&t.word())
}

/// Content: part `i` counts the entries `i` and `i'` together.
pub fn marked_content(t: &MarkedTableau) -> Vec<usize> {
    let mut counts = Vec::new();
    for e in t.entries().values() {
        let i = e.value as usize - 1;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
    }
    counts
}

struct LrsSearch<'a> {
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    content: Option<&'a [usize]>,
    values: Vec<usize>,
    unmarked: Vec<usize>,
    filled: Vec<MarkedSymbol>,
}

impl LrsSearch<'_> {
    fn run(&mut self, at: usize, visit: &mut dyn FnMut(&[MarkedSymbol])) {
        if at == self.cells.len() {
            if is_lrs_word(&self.filled) {
                visit(&self.filled);
            }
            return;
        }
        let right = self.right[at].map(|j| self.filled[j]);
        let above = self.above[at].map(|j| self.filled[j]);
        let max_value = match self.content {
            Some(content) => content.len(),
            None => self.unmarked.iter().rposition(|&n| n > 0).unwrap_or(0) + 1,
        } as u32;
        for value in 1..=max_value {
            let i = value as usize;
            if let Some(content) = self.content {
                if self.values[i] >= content[i - 1] {
                    continue;
                }
            }
            // the prefix of w is a prefix of w ŵ, so the lattice part prunes
            if i >= 2 && self.unmarked[i - 1] <= self.unmarked[i] {
                continue;
            }
            for marked in [true, false] {
                let s = MarkedSymbol { value, marked };
                if right.is_some_and(|r| s > r || (s == r && marked)) {
                    continue;
                }
                if above.is_some_and(|u| u > s || (u == s && !marked)) {
                    continue;
                }
                self.values[i] += 1;
                if !marked {
                    self.unmarked[i] += 1;
                }
                self.filled.push(s);
                self.run(at + 1, visit);
                self.filled.pop();
                if !marked {
                    self.unmarked[i] -= 1;
                }
                self.values[i] -= 1;
            }
        }
    }
}

fn search_lrs(shape: &SkewShape, content: Option<&[usize]>, visit: &mut dyn FnMut(&[MarkedSymbol])) {
    if shape.flavor() != Flavor::Shifted {
        return;
    }
    if let Some(content) = content {
        if content.iter().sum::<usize>() != shape.size() {
            return;
        }
    }
    let cells = shape.reading_order();
    let index = |cell: Cell| cells.iter().position(|&c| c == cell);
    let right = cells.iter().map(|&(r, c)| index((r, c + 1))).collect();
    let above = cells
        .iter()
        .map(|&(r, c)| if r > 1 { index((r - 1, c)) } else { None })
        .collect();
    let width = content.map_or(shape.size(), <[usize]>::len) + 3;
    let mut search = LrsSearch {
        cells,
        right,
        above,
        content,
        values: vec![0; width],
        unmarked: vec![0; width],
        filled: Vec::with_capacity(shape.size()),
    };
    search.run(0, visit);
}

fn build(shape: &SkewShape, filled: &[MarkedSymbol]) -> MarkedTableau {
    let entries = shape.reading_order().into_iter().zip(filled.iter().copied()).collect();
    SkewTableau::from_parts_unchecked(shape.clone(), entries)
}

/// All LRS tableaux of a shifted skew shape with the given content.
pub fn enumerate_lrs(shape: &SkewShape, content: &Partition) -> Vec<MarkedTableau> {
    let mut out = Vec::new();
    search_lrs(shape, Some(content.parts()), &mut |f| out.push(build(shape, f)));
    out
}

/// All LRS tableaux of a shifted skew shape, any content.
pub fn enumerate_lrs_any_content(shape: &SkewShape) -> Vec<MarkedTableau> {
    let mut out = Vec::new();
    search_lrs(shape, None, &mut |f| out.push(build(shape, f)));
    out
}

pub fn count_lrs(shape: &SkewShape, content: &Partition) -> Result<u64> {
    let mut count: u64 = 0;
    let mut overflow = false;
    search_lrs(shape, Some(content.parts()), &mut |_| match count.checked_add(1) {
        Some(c) => count = c,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow);
    }
    Ok(count)
}

/// `f(λ, μ; ν)` for strict partitions inside the staircase `ρ_n`.
pub fn lrs_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    convention: Convention,
) -> Result<u64> {
    let space = AmbientSpace::type_b(n)?;
    for p in [lambda, mu, nu] {
        space.check(p)?;
    }
    if lambda.weight() + mu.weight() != nu.weight() {
        return Ok(0);
    }
    match convention {
        Convention::PaperForm => {
            let outer = space.dual(lambda)?;
            if !outer.contains(mu) {
                return Ok(0);
            }
            let content = space.dual(nu)?;
            count_lrs(&SkewShape::shifted(outer, mu.clone())?, &content)
        }
        Convention::StandardForm => {
            if !nu.contains(lambda) {
                return Ok(0);
            }
            count_lrs(&SkewShape::shifted(nu.clone(), lambda.clone())?, mu)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_has_four_tableaux() {
        let space = AmbientSpace::type_b(7).unwrap();
        let outer = space.dual(&p("5,3,1")).unwrap();
        assert_eq!(outer, p("7,6,4,2"));
        let content = space.dual(&p("6,5,4,1")).unwrap();
        assert_eq!(content, p("7,3,2"));
        let shape = SkewShape::shifted(outer, p("5,2")).unwrap();
        let all = enumerate_lrs(&shape, &content);
        assert_eq!(all.len(), 4);
        for t in &all {
            assert!(is_lrs_tableau(t));
        }
        let f = lrs_coefficient(&p("5,3,1"), &p("5,2"), &p("6,5,4,1"), 7, Convention::PaperForm);
        assert_eq!(f, Ok(4));
    }

    #[test]
    fn pieri_consistent_example() {
        assert_eq!(lrs_coefficient(&p("2"), &p("2"), &p("3,1"), 4, Convention::PaperForm), Ok(2));
        assert_eq!(lrs_coefficient(&p("2"), &p("2"), &p("3,1"), 5, Convention::PaperForm), Ok(2));
    }

    #[test]
    fn identity_and_errors() {
        let space = AmbientSpace::type_b(4).unwrap();
        for l in space.basis() {
            for nu in space.basis() {
                let f = lrs_coefficient(&l, &p(""), &nu, 4, Convention::PaperForm).unwrap();
                assert_eq!(f, u64::from(l == nu));
            }
        }
        assert!(matches!(
            lrs_coefficient(&p("3,3"), &p(""), &p("3,3"), 4, Convention::PaperForm),
            Err(Error::NotStrict(_))
        ));
        assert!(lrs_coefficient(&p("5"), &p(""), &p("5"), 4, Convention::PaperForm).is_err());
    }

    /// Straight shapes carry exactly one LRS tableau of their own content,
    /// checked by filling every cell with every letter up to 4.
    #[test]
    fn straight_shapes_brute_force() {
        let letters: Vec<MarkedSymbol> = (1..=4)
            .flat_map(|v| [MarkedSymbol::marked(v), MarkedSymbol::unmarked(v)])
            .collect();
        for lam in AmbientSpace::type_b(4).unwrap().basis() {
            if lam.weight() > 6 {
                continue;
            }
            let shape = SkewShape::shifted(lam.clone(), p("")).unwrap();
            let size = shape.size() as u32;
            let mut brute = 0;
            for code in 0..8u32.pow(size) {
                let filled: Vec<MarkedSymbol> = (0..size)
                    .map(|d| letters[(code / 8u32.pow(d) % 8) as usize])
                    .collect();
                let t = build(&shape, &filled);
                if is_lrs_tableau(&t) && marked_content(&t) == lam.parts() {
                    brute += 1;
                }
            }
            assert_eq!(brute, 1, "{lam}");
            assert_eq!(enumerate_lrs(&shape, &lam).len(), 1);
        }
    }

    #[test]
    fn wrong_size_content_is_empty() {
        let shape = SkewShape::shifted(p("3,1"), p("")).unwrap();
        assert!(enumerate_lrs(&shape, &p("3")).is_empty());
    }

    #[test]
    fn enumeration_is_sound_and_distinct() {
        let space = AmbientSpace::type_b(4).unwrap();
        for outer in space.basis() {
            for inner in space.basis().into_iter().filter(|i| outer.contains(i)) {
                let shape = SkewShape::shifted(outer.clone(), inner).unwrap();
                let all = enumerate_lrs_any_content(&shape);
                let distinct: BTreeSet<Vec<MarkedSymbol>> = all.iter().map(|t| t.word()).collect();
                assert_eq!(distinct.len(), all.len());
                for t in &all {
                    assert!(is_lrs_tableau(t));
                    // LRS tableaux never carry a mark on the diagonal
                    assert!(t.entries().iter().all(|(&(r, c), e)| r != c || !e.marked));
                    let content = Partition::new(marked_content(t)).unwrap();
                    assert!(enumerate_lrs(&shape, &content).contains(t));
                }
            }
        }
    }
}
