//! Semistandard skew tableaux, lattice words and Littlewood-Richardson counts
//! for the type A Grassmannian.

use crate::error::{Error, Result};
use crate::shapes::{dual_partition, AmbientSpace, Cell, Flavor, Partition, SkewShape};
use crate::tableau::SkewTableau;

/// Type A tableau: positive integer entries on a Young skew shape.
pub type Tableau = SkewTableau<u32>;

/// Which of the two equivalent counting rules to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    /// Tableaux of shape `λ∨/μ` with content `ν∨`.
    #[default]
    PaperForm,
    /// Tableaux of shape `ν/λ` with content `μ`.
    StandardForm,
}

pub fn word_of(t: &Tableau) -> Vec<u32> {
    t.word()
}

/// `counts[i]` is the number of entries equal to `i + 1`.
pub fn content_of(t: &Tableau) -> Vec<usize> {
    let mut counts = Vec::new();
    for &e in t.entries().values() {
        let i = e as usize - 1;
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        counts[i] += 1;
    }
    counts
}

/// Every prefix holds at least as many `i` as `i + 1`.
pub fn is_lattice_word(word: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &w in word {
        let i = w as usize;
        if i == 0 {
            return false;
        }
        if counts.len() <= i {
            counts.resize(i + 1, 0);
        }
        if i > 1 && counts[i - 1] <= counts[i] {
            return false;
        }
        counts[i] += 1;
    }
    true
}

/// Rows weakly increase, columns strictly increase, entries positive.
pub fn is_semistandard(t: &Tableau) -> bool {
    t.flavor() == Flavor::Young
        && t.entries().iter().all(|(&(r, c), &e)| {
            e >= 1
                && t.get((r, c + 1)).is_none_or(|right| e <= right)
                && t.get((r + 1, c)).is_none_or(|below| e < below)
        })
}

pub fn is_lr_tableau(t: &Tableau) -> bool {
    is_semistandard(t) && is_lattice_word(&t.word())
}

/// Neighbours already filled when cells are visited in reading order.
struct FillOrder {
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl FillOrder {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.reading_order();
        let index = |cell: Cell| cells.iter().position(|&c| c == cell);
        let right = cells.iter().map(|&(r, c)| index((r, c + 1))).collect();
        let above = cells
            .iter()
            .map(|&(r, c)| if r > 1 { index((r - 1, c)) } else { None })
            .collect();
        FillOrder { cells, right, above }
    }
}

/// Backtracking over cells in reading order. Row, column and lattice
/// conditions are checked as each entry is placed, so every leaf is an LR
/// tableau. With `content = None` every content is allowed.
struct LrSearch<'a> {
    order: FillOrder,
    content: Option<&'a [usize]>,
    counts: Vec<usize>,
    filled: Vec<u32>,
}

impl LrSearch<'_> {
    fn run(&mut self, at: usize, visit: &mut dyn FnMut(&[u32])) {
        if at == self.order.cells.len() {
            visit(&self.filled);
            return;
        }
        let upper = self.order.right[at].map_or(u32::MAX, |j| self.filled[j]);
        let lower = self.order.above[at].map_or(1, |j| self.filled[j] + 1);
        // lattice: a new value can exceed the largest value seen by at most one
        let highest = self.counts.iter().rposition(|&n| n > 0).map_or(0, |i| i + 1) as u32 + 1;
        let top = match self.content {
            Some(content) => upper.min(content.len() as u32),
            None => upper.min(highest),
        };
        for v in lower..=top {
            let i = v as usize - 1;
            if let Some(content) = self.content {
                if self.counts[i] >= content[i] {
                    continue;
                }
            }
            if i > 0 && self.counts[i - 1] <= self.counts[i] {
                continue;
            }
            if self.counts.len() <= i + 1 {
                self.counts.resize(i + 2, 0);
            }
            self.counts[i] += 1;
            self.filled.push(v);
            self.run(at + 1, visit);
            self.filled.pop();
            self.counts[i] -= 1;
        }
    }
}

fn search_lr(shape: &SkewShape, content: Option<&[usize]>, visit: &mut dyn FnMut(&[u32])) {
    if shape.flavor() != Flavor::Young {
        return;
    }
    if let Some(content) = content {
        if content.iter().sum::<usize>() != shape.size() {
            return;
        }
    }
    let width = content.map_or(shape.size(), <[usize]>::len) + 2;
    let mut search = LrSearch {
        order: FillOrder::new(shape),
        content,
        counts: vec![0; width],
        filled: Vec::with_capacity(shape.size()),
    };
    search.run(0, visit);
}

fn build(shape: &SkewShape, cells: &[Cell], filled: &[u32]) -> Tableau {
    let entries = cells.iter().copied().zip(filled.iter().copied()).collect();
    SkewTableau::from_parts_unchecked(shape.clone(), entries)
}

/// All LR tableaux of `shape` with the given content, in lexicographic
/// order of their words.
pub fn enumerate_lr(shape: &SkewShape, content: &Partition) -> Vec<Tableau> {
    let cells = shape.reading_order();
    let mut out = Vec::new();
    search_lr(shape, Some(content.parts()), &mut |filled| {
        out.push(build(shape, &cells, filled))
    });
    out
}

/// All LR tableaux of `shape`, any content.
pub fn enumerate_lr_any_content(shape: &SkewShape) -> Vec<Tableau> {
    let cells = shape.reading_order();
    let mut out = Vec::new();
    search_lr(shape, None, &mut |filled| out.push(build(shape, &cells, filled)));
    out
}

/// Number of LR tableaux of `shape` with the given content.
pub fn count_lr(shape: &SkewShape, content: &Partition) -> Result<u64> {
    let mut count: u64 = 0;
    let mut overflow = false;
    search_lr(shape, Some(content.parts()), &mut |_| match count.checked_add(1) {
        Some(c) => count = c,
        None => overflow = true,
    });
    if overflow {
        return Err(Error::Overflow);
    }
    Ok(count)
}

/// `c(λ, μ; ν)` for the Grassmannian `A:k,m`.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ambient: &AmbientSpace,
    convention: Convention,
) -> Result<u64> {
    let AmbientSpace::TypeA { k, m } = *ambient else {
        return Err(Error::InvalidSpace(format!("{ambient} is not a type A space")));
    };
    for p in [lambda, mu, nu] {
        ambient.check(p)?;
    }
    if lambda.weight() + mu.weight() != nu.weight() {
        return Ok(0);
    }
    match convention {
        Convention::PaperForm => {
            let outer = dual_partition(lambda, k, m)?;
            if !outer.contains(mu) {
                return Ok(0);
            }
            let content = dual_partition(nu, k, m)?;
            count_lr(&SkewShape::young(outer, mu.clone())?, &content)
        }
        Convention::StandardForm => {
            if !nu.contains(lambda) {
                return Ok(0);
            }
            count_lr(&SkewShape::young(nu.clone(), lambda.clone())?, mu)
        }
    }
}
