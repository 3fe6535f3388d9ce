//! The ring spanned by Schubert classes of one Grassmannian, with products
//! given by the tableau structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr_tableaux::{lr_coefficient, Convention};
use crate::shapes::{horizontal_strip_successors, pieri_exponent, AmbientSpace, Partition};
use crate::shifted::lrs_coefficient;

pub fn basis(space: &AmbientSpace) -> Vec<Partition> {
    space.basis()
}

/// `2^exponent * f`, rejecting negative exponents unless `f = 0`.
fn scale_by_power_of_two(exponent: i64, f: u64) -> Result<u64> {
    if f == 0 {
        return Ok(0);
    }
    if exponent < 0 {
        return Err(Error::NonIntegral { exponent, f });
    }
    u32::try_from(exponent)
        .ok()
        .and_then(|e| 1u64.checked_shl(e))
        .and_then(|two| two.checked_mul(f))
        .ok_or(Error::Overflow)
}

/// The structure constant of `space` in the chosen tableau convention:
/// `c` for type A, `f` for types B and D, `e = 2^{ℓ(λ)+ℓ(μ)-ℓ(ν)} f` for
/// type C.
pub fn structure_constant(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    space: &AmbientSpace,
    convention: Convention,
) -> Result<u64> {
    let space = space.normalized();
    match space {
        AmbientSpace::TypeA { .. } => lr_coefficient(lambda, mu, nu, &space, convention),
        AmbientSpace::TypeB { n } => lrs_coefficient(lambda, mu, nu, n, convention),
        AmbientSpace::TypeC { n } => {
            let f = lrs_coefficient(lambda, mu, nu, n, convention)?;
            let exponent = lambda.len() as i64 + mu.len() as i64 - nu.len() as i64;
            scale_by_power_of_two(exponent, f)
        }
        AmbientSpace::TypeD { .. } => unreachable!("normalized"),
    }
}

/// Coefficient of `s_ν` in `s_p ∘ s_λ` from strip counting alone.
fn pieri_weight(space: &AmbientSpace, lambda: &Partition, nu: &Partition) -> Result<u64> {
    match space.normalized() {
        AmbientSpace::TypeA { .. } => Ok(1),
        AmbientSpace::TypeB { .. } => scale_by_power_of_two(pieri_exponent(nu, lambda)? as i64, 1),
        AmbientSpace::TypeC { .. } => {
            let exponent = lambda.len() as i64 + 1 - nu.len() as i64 + pieri_exponent(nu, lambda)? as i64;
            scale_by_power_of_two(exponent, 1)
        }
        AmbientSpace::TypeD { .. } => unreachable!("normalized"),
    }
}

type Expansion = BTreeMap<Partition, u64>;

/// Structure constants of one space, computed on demand and memoized per
/// pair of factors.
pub struct SchubertRing {
    space: AmbientSpace,
    basis: Vec<Partition>,
    memo: RwLock<HashMap<(Partition, Partition), Arc<Expansion>>>,
}

impl SchubertRing {
    pub fn new(space: AmbientSpace) -> Self {
        SchubertRing {
            space,
            basis: space.basis(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn space(&self) -> AmbientSpace {
        self.space
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn element(&self, lambda: &Partition) -> Result<RingElement> {
        RingElement::basis_element(self.space, lambda)
    }

    /// Nonzero constants `ν ↦ coefficient` of `s_λ ∘ s_μ`.
    pub fn product_expansion(&self, lambda: &Partition, mu: &Partition) -> Result<Arc<Expansion>> {
        self.space.check(lambda)?;
        self.space.check(mu)?;
        let key = (lambda.clone(), mu.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let weight = lambda.weight() + mu.weight();
        let mut expansion = Expansion::new();
        for nu in self.basis.iter().filter(|nu| nu.weight() == weight) {
            let c = structure_constant(lambda, mu, nu, &self.space, Convention::PaperForm)?;
            if c != 0 {
                expansion.insert(nu.clone(), c);
            }
        }
        let mut memo = self.memo.write().expect("memo lock");
        Ok(Arc::clone(memo.entry(key).or_insert_with(|| Arc::new(expansion))))
    }

    pub fn structure_constant(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        self.space.check(nu)?;
        Ok(self.product_expansion(lambda, mu)?.get(nu).copied().unwrap_or(0))
    }

    pub fn multiply(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        for x in [a, b] {
            if x.space != self.space {
                return Err(Error::MixedSpaces(self.space.to_string(), x.space.to_string()));
            }
        }
        let mut out = RingElement::zero(self.space);
        for (lambda, &x) in &a.terms {
            for (mu, &y) in &b.terms {
                let xy = x.checked_mul(y).ok_or(Error::Overflow)?;
                for (nu, &c) in self.product_expansion(lambda, mu)?.iter() {
                    let c = i64::try_from(c).map_err(|_| Error::Overflow)?;
                    out.add_term(nu, xy.checked_mul(c).ok_or(Error::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `s_p ∘ x` from horizontal strips and their `2^N` weights, without
    /// any tableau enumeration.
    pub fn pieri_multiply(&self, p: usize, x: &RingElement) -> Result<RingElement> {
        if x.space != self.space {
            return Err(Error::MixedSpaces(self.space.to_string(), x.space.to_string()));
        }
        let max = self.space.max_special();
        if p == 0 || p > max {
            return Err(Error::PieriOutOfRange { p, max });
        }
        let mut out = RingElement::zero(self.space);
        for (lambda, &c) in &x.terms {
            for nu in horizontal_strip_successors(lambda, p, &self.space) {
                let w = i64::try_from(pieri_weight(&self.space, lambda, &nu)?).map_err(|_| Error::Overflow)?;
                out.add_term(&nu, c.checked_mul(w).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }
}

/// An integer combination of basis classes of one space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingElement {
    space: AmbientSpace,
    terms: BTreeMap<Partition, i64>,
}

impl RingElement {
    pub fn zero(space: AmbientSpace) -> Self {
        RingElement {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(space: AmbientSpace, lambda: &Partition) -> Result<Self> {
        let mut x = RingElement::zero(space);
        x.add_term(lambda, 1)?;
        Ok(x)
    }

    pub fn space(&self) -> AmbientSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, lambda: &Partition, c: i64) -> Result<()> {
        self.space.check(lambda)?;
        let entry = self.terms.entry(lambda.clone()).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(lambda);
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        if self.space != other.space {
            return Err(Error::MixedSpaces(self.space.to_string(), other.space.to_string()));
        }
        let mut out = self.clone();
        for (lambda, &c) in &other.terms {
            out.add_term(lambda, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<RingElement> {
        let mut out = RingElement::zero(self.space);
        for (lambda, &c) in &self.terms {
            out.add_term(lambda, c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    /// Terms by descending weight, then lexicographically descending.
    pub fn terms(&self) -> Vec<(Partition, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(p, &c)| (p.clone(), c)).collect();
        v.sort_by(|a, b| a.0.expansion_cmp(&b.0));
        v
    }

    /// `{"space": ..., "terms": [{"partition": [..], "coefficient": c}]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Term {
            partition: Partition,
            coefficient: i64,
        }
        #[derive(Serialize)]
        struct Expansion {
            space: String,
            terms: Vec<Term>,
        }
        let terms = self
            .terms()
            .into_iter()
            .map(|(partition, coefficient)| Term { partition, coefficient })
            .collect();
        serde_json::to_string(&Expansion {
            space: self.space.to_string(),
            terms,
        })
        .expect("expansion serializes")
    }
}

/// `s[2] + 2*s[1,1]`, `0` for the zero element.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            write!(f, "s[{}]", lambda.literal())?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Associativity { x: Partition, y: Partition, z: Partition },
    Commutativity { x: Partition, y: Partition },
    Identity { x: Partition },
    Pieri { p: usize, lambda: Partition },
    Duality { lambda: Partition, mu: Partition, got: u64 },
    Oracle { lambda: Partition, mu: Partition, nu: Partition, expected: i64, got: u64 },
    Failure { message: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { x, y, z } => write!(f, "associativity fails at {x}, {y}, {z}"),
            Violation::Commutativity { x, y } => write!(f, "commutativity fails at {x}, {y}"),
            Violation::Identity { x } => write!(f, "s[] is not an identity for {x}"),
            Violation::Pieri { p, lambda } => write!(f, "pieri product with p={p} disagrees at {lambda}"),
            Violation::Duality { lambda, mu, got } => {
                write!(f, "top-class coefficient of {lambda} * {mu} is {got}")
            }
            Violation::Oracle { lambda, mu, nu, expected, got } => {
                write!(f, "constant for {lambda} * {mu} at {nu} is {got}, oracle says {expected}")
            }
            Violation::Failure { message } => write!(f, "{message}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub space: String,
    pub basis_size: usize,
    pub triples: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn failure(e: Error) -> Violation {
    Violation::Failure { message: e.to_string() }
}

fn check_associativity(ring: &SchubertRing, x: &Partition) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut run = || -> Result<()> {
        let sx = ring.element(x)?;
        for y in ring.basis() {
            let sy = ring.element(y)?;
            let xy = ring.multiply(&sx, &sy)?;
            for z in ring.basis() {
                let sz = ring.element(z)?;
                let left = ring.multiply(&xy, &sz)?;
                let right = ring.multiply(&sx, &ring.multiply(&sy, &sz)?)?;
                if left != right {
                    out.push(Violation::Associativity {
                        x: x.clone(),
                        y: y.clone(),
                        z: z.clone(),
                    });
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run() {
        return vec![failure(e)];
    }
    out
}

/// Runs associativity, commutativity, identity, Pieri agreement and
/// duality over the whole basis of `space`.
pub fn verify_space(space: &AmbientSpace) -> VerifyReport {
    let ring = SchubertRing::new(*space);
    verify_ring(&ring)
}

pub fn verify_ring(ring: &SchubertRing) -> VerifyReport {
    let basis = ring.basis();
    let mut violations = Vec::new();
    let mut run = || -> Result<()> {
        let one = ring.element(&Partition::empty())?;
        let top = ring.space().top_class();
        for x in basis {
            let sx = ring.element(x)?;
            if ring.multiply(&one, &sx)? != sx || ring.multiply(&sx, &one)? != sx {
                violations.push(Violation::Identity { x: x.clone() });
            }
            for y in basis {
                let sy = ring.element(y)?;
                if ring.multiply(&sx, &sy)? != ring.multiply(&sy, &sx)? {
                    violations.push(Violation::Commutativity { x: x.clone(), y: y.clone() });
                }
                let got = ring.structure_constant(x, y, &top)?;
                if got != u64::from(ring.space().dual(x)? == *y) {
                    violations.push(Violation::Duality {
                        lambda: x.clone(),
                        mu: y.clone(),
                        got,
                    });
                }
            }
            for p in 1..=ring.space().max_special() {
                let special = ring.element(&Partition::new(vec![p])?)?;
                if ring.pieri_multiply(p, &sx)? != ring.multiply(&special, &sx)? {
                    violations.push(Violation::Pieri { p, lambda: x.clone() });
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run() {
        violations.push(failure(e));
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(basis.len().max(1));
    let chunks: Vec<&[Partition]> = basis.chunks(basis.len().div_ceil(workers).max(1)).collect();
    let found: Vec<Vec<Violation>> = thread::scope(|s| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| s.spawn(move || chunk.iter().flat_map(|x| check_associativity(ring, x)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    violations.extend(found.into_iter().flatten());
    VerifyReport {
        space: ring.space().to_string(),
        basis_size: basis.len(),
        triples: basis.len().pow(3),
        violations,
    }
}
