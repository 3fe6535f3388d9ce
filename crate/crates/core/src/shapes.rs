//! Partitions, ambient spaces and the cell geometry of Young and shifted diagrams.
//!
//! Coordinates are 1-based `(row, column)` with row 1 at the top. In a shifted
//! diagram row `i` is indented by `i - 1` columns, so the cell `(i, i)` is the
//! first cell of row `i` and lies on the main diagonal.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `(row, column)` position, 1-based.
pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so `(4,2,0)` and `(4,2)` are the same value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The `k x m` rectangle `(m^k)`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        Partition { parts: vec![m; k] }
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition { parts: (1..=n).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn fits_in_rectangle(&self, k: usize, m: usize) -> bool {
        self.len() <= k && self.part(1) <= m
    }

    /// Comma-separated literal, empty string for the empty partition.
    pub fn literal(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Ordering used for bases: ascending weight, then lexicographically descending.
    pub fn basis_cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }

    /// Ordering used for printed expansions: descending weight, then
    /// lexicographically descending.
    pub fn expansion_cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "partition",
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.literal())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.literal())
    }
}

/// A partition with distinct parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        Self::try_from(Partition::new(parts)?)
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p))
        }
    }
}

impl Deref for StrictPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::try_from(s.parse::<Partition>()?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The Grassmannian whose Schubert basis is being indexed.
///
/// `TypeA { k, m }` is `G(k, k+m)` with basis the partitions inside `(m^k)`.
/// `TypeB` and `TypeC` are the odd orthogonal and Lagrangian Grassmannians with
/// basis the strict partitions inside the staircase `(n, ..., 1)`. `TypeD(n)`
/// has the same basis and constants as `TypeB(n-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AmbientSpace {
    TypeA { k: usize, m: usize },
    TypeB { n: usize },
    TypeC { n: usize },
    TypeD { n: usize },
}

impl AmbientSpace {
    pub fn type_a(k: usize, m: usize) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::InvalidSpace(format!("A:k={k},m={m} needs k, m >= 1")));
        }
        Ok(AmbientSpace::TypeA { k, m })
    }

    pub fn type_b(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpace("B:n=0 needs n >= 1".into()));
        }
        Ok(AmbientSpace::TypeB { n })
    }

    pub fn type_c(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpace("C:n=0 needs n >= 1".into()));
        }
        Ok(AmbientSpace::TypeC { n })
    }

    pub fn type_d(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpace(format!("D:n={n} needs n >= 2")));
        }
        Ok(AmbientSpace::TypeD { n })
    }

    /// `TypeD(n)` becomes `TypeB(n-1)`; every other space is returned as is.
    pub fn normalized(self) -> Self {
        match self {
            AmbientSpace::TypeD { n } => AmbientSpace::TypeB { n: n - 1 },
            other => other,
        }
    }

    /// Whether the basis is indexed by strict partitions (types B, C, D).
    pub fn is_shifted(&self) -> bool {
        !matches!(self, AmbientSpace::TypeA { .. })
    }

    /// Staircase size after normalization, for the shifted types.
    pub fn staircase_size(&self) -> Option<usize> {
        match self.normalized() {
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => Some(n),
            _ => None,
        }
    }

    /// The class of top degree: `(m^k)` or the staircase.
    pub fn top_class(&self) -> Partition {
        match self.normalized() {
            AmbientSpace::TypeA { k, m } => Partition::rectangle(k, m),
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => Partition::staircase(n),
            AmbientSpace::TypeD { .. } => unreachable!("normalized"),
        }
    }

    /// Largest index `p` of a special class.
    pub fn max_special(&self) -> usize {
        match self.normalized() {
            AmbientSpace::TypeA { m, .. } => m,
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => n,
            AmbientSpace::TypeD { .. } => unreachable!("normalized"),
        }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        match self.normalized() {
            AmbientSpace::TypeA { k, m } => lambda.fits_in_rectangle(k, m),
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => {
                lambda.is_strict() && lambda.part(1) <= n
            }
            AmbientSpace::TypeD { .. } => unreachable!("normalized"),
        }
    }

    pub fn check(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else if self.is_shifted() && !lambda.is_strict() {
            Err(Error::NotStrict(lambda.clone()))
        } else {
            Err(Error::OutsideAmbient {
                partition: lambda.clone(),
                space: self.to_string(),
            })
        }
    }

    /// The complement `λ∨` of a basis element.
    pub fn dual(&self, lambda: &Partition) -> Result<Partition> {
        match self.normalized() {
            AmbientSpace::TypeA { k, m } => dual_partition(lambda, k, m),
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => {
                let strict = StrictPartition::try_from(lambda.clone())?;
                Ok(staircase_complement(&strict, n)?.into_partition())
            }
            AmbientSpace::TypeD { .. } => unreachable!("normalized"),
        }
    }

    /// All basis partitions, ascending weight then lexicographically descending.
    pub fn basis(&self) -> Vec<Partition> {
        let mut out = match self.normalized() {
            AmbientSpace::TypeA { k, m } => partitions_in_rectangle(k, m),
            AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => strict_partitions_in_staircase(n),
            AmbientSpace::TypeD { .. } => unreachable!("normalized"),
        };
        out.sort_by(Partition::basis_cmp);
        out
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientSpace::TypeA { k, m } => write!(f, "A:k={k},m={m}"),
            AmbientSpace::TypeB { n } => write!(f, "B:n={n}"),
            AmbientSpace::TypeC { n } => write!(f, "C:n={n}"),
            AmbientSpace::TypeD { n } => write!(f, "D:n={n}"),
        }
    }
}

impl FromStr for AmbientSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "space",
            token: s.to_string(),
        };
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let mut k = None;
        let mut m = None;
        let mut n = None;
        for field in rest.split(',') {
            let (key, value) = field.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            let slot = match key.trim() {
                "k" => &mut k,
                "m" => &mut m,
                "n" => &mut n,
                _ => return Err(bad()),
            };
            if slot.replace(value).is_some() {
                return Err(bad());
            }
        }
        match (kind.trim(), k, m, n) {
            ("A", Some(k), Some(m), None) => AmbientSpace::type_a(k, m),
            ("B", None, None, Some(n)) => AmbientSpace::type_b(n),
            ("C", None, None, Some(n)) => AmbientSpace::type_c(n),
            ("D", None, None, Some(n)) => AmbientSpace::type_d(n),
            _ => Err(bad()),
        }
    }
}

/// `λ∨ = (m - λ_k, ..., m - λ_1)`, the complement of `λ` in `(m^k)`.
pub fn dual_partition(lambda: &Partition, k: usize, m: usize) -> Result<Partition> {
    if !lambda.fits_in_rectangle(k, m) {
        return Err(Error::NotContained {
            inner: lambda.clone(),
            outer: Partition::rectangle(k, m),
        });
    }
    Partition::new((1..=k).rev().map(|i| m - lambda.part(i)).collect())
}

/// The strict partition whose parts are `{1..n}` minus the parts of `λ`.
pub fn staircase_complement(lambda: &StrictPartition, n: usize) -> Result<StrictPartition> {
    if lambda.part(1) > n {
        return Err(Error::NotContained {
            inner: lambda.as_partition().clone(),
            outer: Partition::staircase(n),
        });
    }
    let parts = (1..=n)
        .rev()
        .filter(|v| !lambda.parts().contains(v))
        .collect();
    StrictPartition::new(parts)
}

/// `outer / inner` has at most one cell in each column of the Young diagram.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (1..=outer.len()).all(|i| outer.part(i + 1) <= inner.part(i))
}

/// Every `λ̃` in the basis of `ambient` with `λ →p λ̃`.
pub fn horizontal_strip_successors(
    lambda: &Partition,
    p: usize,
    ambient: &AmbientSpace,
) -> Vec<Partition> {
    let rows = lambda.len() + 1;
    let cap = match ambient.normalized() {
        AmbientSpace::TypeA { m, .. } => m,
        _ => ambient.max_special(),
    };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    grow_strip(lambda, cap, 1, rows, p, &mut current, &mut out);
    out.retain(|nu| ambient.contains(nu));
    out.sort_by(Partition::expansion_cmp);
    out
}

fn grow_strip(
    lambda: &Partition,
    cap: usize,
    row: usize,
    rows: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > rows {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("interlacing keeps order"));
        }
        return;
    }
    let low = lambda.part(row);
    let high = if row == 1 { cap } else { lambda.part(row - 1) };
    for value in low..=high.max(low) {
        let added = value - low;
        if added > remaining {
            break;
        }
        current.push(value);
        grow_strip(lambda, cap, row + 1, rows, remaining - added, current, out);
        current.pop();
    }
}

/// Young or shifted cell geometry.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Flavor {
    Young,
    Shifted,
}

impl Flavor {
    /// Number of columns row `r` is indented by.
    pub fn row_offset(self, r: usize) -> usize {
        match self {
            Flavor::Young => 0,
            Flavor::Shifted => r - 1,
        }
    }

    /// Whether `cell` belongs to the diagram of `lambda`.
    pub fn in_diagram(self, lambda: &Partition, (r, c): Cell) -> bool {
        if r == 0 {
            return false;
        }
        let off = self.row_offset(r);
        c > off && c <= off + lambda.part(r)
    }

    /// Whether `(r, c)` is a position the flavor allows at all.
    pub fn is_position(self, (r, c): Cell) -> bool {
        r >= 1 && c > self.row_offset(r)
    }
}

/// A skew shape `outer / inner` in either flavor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    flavor: Flavor,
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(flavor: Flavor, outer: Partition, inner: Partition) -> Result<Self> {
        if flavor == Flavor::Shifted {
            for p in [&outer, &inner] {
                if !p.is_strict() {
                    return Err(Error::NotStrict(p.clone()));
                }
            }
        }
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { flavor, outer, inner })
    }

    pub fn young(outer: Partition, inner: Partition) -> Result<Self> {
        Self::new(Flavor::Young, outer, inner)
    }

    pub fn shifted(outer: Partition, inner: Partition) -> Result<Self> {
        Self::new(Flavor::Shifted, outer, inner)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.flavor.in_diagram(&self.outer, cell) && !self.flavor.in_diagram(&self.inner, cell)
    }

    pub fn cells(&self) -> CellSet {
        let mut cells = BTreeSet::new();
        for r in 1..=self.outer.len() {
            let off = self.flavor.row_offset(r);
            for c in off + self.inner.part(r) + 1..=off + self.outer.part(r) {
                cells.insert((r, c));
            }
        }
        CellSet {
            flavor: self.flavor,
            cells,
        }
    }

    /// Cells in reading order: rows top to bottom, each row right to left.
    pub fn reading_order(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.outer.len() {
            let off = self.flavor.row_offset(r);
            for c in (off + self.inner.part(r) + 1..=off + self.outer.part(r)).rev() {
                out.push((r, c));
            }
        }
        out
    }
}

/// A finite set of cells tagged with the geometry it was drawn in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellSet {
    flavor: Flavor,
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn new(flavor: Flavor, cells: impl IntoIterator<Item = Cell>) -> Self {
        CellSet {
            flavor,
            cells: cells.into_iter().collect(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// Edge-connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.cells {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some((r, c)) = queue.pop_front() {
                let neighbours = [(r + 1, c), (r, c + 1), (r.wrapping_sub(1), c), (r, c.wrapping_sub(1))];
                for nb in neighbours {
                    if self.cells.contains(&nb) && seen.insert(nb) {
                        comp.push(nb);
                        queue.push_back(nb);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when no 2x2 block of cells is present.
    pub fn has_no_square(&self) -> bool {
        self.cells.iter().all(|&(r, c)| {
            !(self.contains((r + 1, c)) && self.contains((r, c + 1)) && self.contains((r + 1, c + 1)))
        })
    }
}

/// Component count of the shifted skew diagram `S(λ̃/λ)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BorderStripData {
    pub components: usize,
    /// One less than the number of components.
    pub n: usize,
}

/// Counts the edge-connected components of `S(λ̃/λ)`. When `λ̃/λ` is a
/// horizontal strip every component must be a border strip; a violation is
/// reported as an invalid tableau shape.
pub fn border_strip_data(
    lambda_tilde: &StrictPartition,
    lambda: &StrictPartition,
) -> Result<BorderStripData> {
    let shape = SkewShape::shifted(
        lambda_tilde.as_partition().clone(),
        lambda.as_partition().clone(),
    )?;
    let cells = shape.cells();
    if cells.is_empty() {
        return Err(Error::EmptySkew {
            inner: lambda.as_partition().clone(),
            outer: lambda_tilde.as_partition().clone(),
        });
    }
    let components = cells.components();
    if is_horizontal_strip(lambda_tilde, lambda) {
        for comp in &components {
            if !CellSet::new(Flavor::Shifted, comp.iter().copied()).has_no_square() {
                return Err(Error::InvalidTableau(format!(
                    "component {comp:?} of S({lambda_tilde}/{lambda}) contains a 2x2 block"
                )));
            }
        }
    }
    Ok(BorderStripData {
        components: components.len(),
        n: components.len() - 1,
    })
}

/// The Pieri multiplicity exponent `N(λ̃/λ)`, taken to be 0 when `λ̃ = λ`.
pub fn pieri_exponent(lambda_tilde: &Partition, lambda: &Partition) -> Result<usize> {
    if lambda_tilde == lambda {
        return Ok(0);
    }
    let outer = StrictPartition::try_from(lambda_tilde.clone())?;
    let inner = StrictPartition::try_from(lambda.clone())?;
    Ok(border_strip_data(&outer, &inner)?.n)
}

fn partitions_in_rectangle(k: usize, m: usize) -> Vec<Partition> {
    fn go(k: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(current.clone()).expect("built decreasing"));
        if current.len() == k {
            return;
        }
        for part in 1..=cap {
            current.push(part);
            go(k, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(k, m, &mut Vec::new(), &mut out);
    out
}

fn strict_partitions_in_staircase(n: usize) -> Vec<Partition> {
    (0u32..1 << n)
        .map(|mask| {
            let parts = (1..=n).rev().filter(|v| mask & (1 << (v - 1)) != 0).collect();
            Partition::new(parts).expect("distinct descending parts")
        })
        .collect()
}

/// All partitions of `weight` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_of(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_len: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("built decreasing"));
            return;
        }
        if current.len() == max_len {
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            current.push(part);
            go(remaining - part, max_len, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("5,3,1").parts(), &[5, 3, 1]);
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("4,2,0"), p("4,2"));
        assert!(matches!("3,x".parse::<Partition>(), Err(Error::Parse { token, .. }) if token == "x"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!(matches!("3,3".parse::<StrictPartition>(), Err(Error::NotStrict(_))));
        assert_eq!(p("2,1").to_string(), "(2,1)");
    }

    #[test]
    fn space_literals() {
        for lit in ["A:k=3,m=5", "B:n=7", "C:n=7", "D:n=8"] {
            assert_eq!(lit.parse::<AmbientSpace>().unwrap().to_string(), lit);
        }
        assert!("A:k=0,m=2".parse::<AmbientSpace>().is_err());
        assert!("D:n=1".parse::<AmbientSpace>().is_err());
        assert!("B:k=2".parse::<AmbientSpace>().is_err());
        assert!("E:n=6".parse::<AmbientSpace>().is_err());
        assert_eq!(
            "D:n=8".parse::<AmbientSpace>().unwrap().normalized(),
            AmbientSpace::TypeB { n: 7 }
        );
    }

    #[test]
    fn dual_partition_examples() {
        assert_eq!(dual_partition(&p("5,3,1"), 3, 5).unwrap(), p("4,2"));
        assert_eq!(dual_partition(&p(""), 2, 2).unwrap(), p("2,2"));
        assert_eq!(dual_partition(&p("5,5,5"), 3, 5).unwrap(), p(""));
        assert!(dual_partition(&p("6"), 3, 5).is_err());
        assert!(dual_partition(&p("1,1,1,1"), 3, 5).is_err());
    }

    #[test]
    fn staircase_complement_examples() {
        assert_eq!(staircase_complement(&sp("5,3,1"), 7).unwrap(), sp("7,6,4,2"));
        assert_eq!(staircase_complement(&sp(""), 3).unwrap(), sp("3,2,1"));
        assert_eq!(staircase_complement(&sp("3,2,1"), 3).unwrap(), sp(""));
        assert!(staircase_complement(&sp("8"), 7).is_err());
    }

    #[test]
    fn involutions_exhaustive() {
        for k in 1..=4 {
            for m in 1..=4 {
                for lam in AmbientSpace::type_a(k, m).unwrap().basis() {
                    let d = dual_partition(&lam, k, m).unwrap();
                    assert_eq!(dual_partition(&d, k, m).unwrap(), lam);
                }
            }
        }
        for n in 1..=7 {
            for lam in AmbientSpace::type_b(n).unwrap().basis() {
                let lam = StrictPartition::try_from(lam).unwrap();
                let d = staircase_complement(&lam, n).unwrap();
                assert_eq!(staircase_complement(&d, n).unwrap(), lam);
            }
        }
    }

    #[test]
    fn strip_successor_examples() {
        let a22 = AmbientSpace::type_a(2, 2).unwrap();
        assert_eq!(horizontal_strip_successors(&p("1"), 1, &a22), vec![p("2"), p("1,1")]);
        let b2 = AmbientSpace::type_b(2).unwrap();
        assert_eq!(horizontal_strip_successors(&p("1"), 1, &b2), vec![p("2")]);
        let b3 = AmbientSpace::type_b(3).unwrap();
        assert_eq!(horizontal_strip_successors(&p("2"), 2, &b3), vec![p("3,1")]);
        assert_eq!(horizontal_strip_successors(&p("2,1"), 0, &b3), vec![p("2,1")]);
        assert!(horizontal_strip_successors(&p("3,2,1"), 1, &b3).is_empty());
    }

    #[test]
    fn strip_successors_match_brute_force() {
        for space in [AmbientSpace::type_a(3, 3).unwrap(), AmbientSpace::type_b(4).unwrap()] {
            let basis = space.basis();
            for lam in &basis {
                for pp in 0..=space.max_special() {
                    let fast = horizontal_strip_successors(lam, pp, &space);
                    let mut brute: Vec<Partition> = basis
                        .iter()
                        .filter(|nu| nu.weight() == lam.weight() + pp && is_horizontal_strip(nu, lam))
                        .cloned()
                        .collect();
                    brute.sort_by(Partition::expansion_cmp);
                    assert_eq!(fast, brute, "{lam} p={pp} in {space}");
                }
            }
        }
    }

    #[test]
    fn border_strip_examples() {
        let d = border_strip_data(&sp("3,1"), &sp("2")).unwrap();
        assert_eq!((d.components, d.n), (2, 1));
        let d = border_strip_data(&sp("2,1"), &sp("1")).unwrap();
        assert_eq!((d.components, d.n), (1, 0));
        let d = border_strip_data(&sp("2"), &sp("1")).unwrap();
        assert_eq!((d.components, d.n), (1, 0));
        assert!(border_strip_data(&sp("2"), &sp("3")).is_err());
        assert!(border_strip_data(&sp("2"), &sp("2")).is_err());
    }

    #[test]
    fn shifted_strips_are_border_strips() {
        let space = AmbientSpace::type_b(6).unwrap();
        for lam in space.basis() {
            for pp in 1..=6 {
                for nu in horizontal_strip_successors(&lam, pp, &space) {
                    let shape = SkewShape::shifted(nu.clone(), lam.clone()).unwrap();
                    for comp in shape.cells().components() {
                        assert!(CellSet::new(Flavor::Shifted, comp).has_no_square());
                    }
                }
            }
        }
    }

    #[test]
    fn cell_counts_match_weights() {
        for (flavor, space) in [
            (Flavor::Young, AmbientSpace::type_a(3, 3).unwrap()),
            (Flavor::Shifted, AmbientSpace::type_b(4).unwrap()),
        ] {
            let basis = space.basis();
            for outer in &basis {
                for inner in basis.iter().filter(|i| outer.contains(i)) {
                    let shape = SkewShape::new(flavor, outer.clone(), inner.clone()).unwrap();
                    assert_eq!(shape.cells().len(), outer.weight() - inner.weight());
                    assert_eq!(shape.reading_order().len(), shape.size());
                }
            }
        }
    }

    #[test]
    fn shifted_cells_are_indented() {
        let shape = SkewShape::shifted(p("3,1"), p("2")).unwrap();
        let cells: Vec<Cell> = shape.cells().iter().collect();
        assert_eq!(cells, vec![(1, 3), (2, 2)]);
    }

    #[test]
    fn basis_sizes() {
        let a22 = AmbientSpace::type_a(2, 2).unwrap().basis();
        assert_eq!(a22, vec![p(""), p("1"), p("2"), p("1,1"), p("2,1"), p("2,2")]);
        assert_eq!(AmbientSpace::type_a(3, 3).unwrap().basis().len(), 20);
        let b2 = AmbientSpace::type_b(2).unwrap().basis();
        assert_eq!(b2, vec![p(""), p("1"), p("2"), p("2,1")]);
        assert_eq!(AmbientSpace::type_d(3).unwrap().basis(), b2);
        assert_eq!(AmbientSpace::type_c(4).unwrap().basis().len(), 16);
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(5, 5, 5).len(), 7);
        assert_eq!(partitions_of(4, 2, 3).len(), 2);
        assert_eq!(partitions_of(0, 0, 0), vec![Partition::empty()]);
    }
}
