//! Squarefree monomial ideals, stored as minimal antichains of supports.
//!
//! A squarefree monomial `x_{i1} ... x_{ik}` in `n` variables is identified with
//! its support `{i1, ..., ik}`, kept as a bit mask (bit `i - 1` for `x_i`).
//! Divisibility is subset containment.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::IdealError;
use crate::graph::SimpleGraph;

/// Largest ambient variable count: supports are `u32` masks.
pub const SUPPORT_LIMIT: usize = 24;

/// Default node budget for [`SquarefreeIdeal::has_linear_quotients`].
pub const DEFAULT_LQ_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    n: usize,
    support: u32,
}

impl SquarefreeMonomial {
    /// The monomial `prod_{i in vars} x_i` in `n` variables.
    pub fn new(n: usize, vars: &[usize]) -> Result<Self, IdealError> {
        check_ambient(n)?;
        let mut support = 0u32;
        for &v in vars {
            if v == 0 || v > n {
                return Err(IdealError::VariableOutOfRange { var: v, n });
            }
            support |= 1 << (v - 1);
        }
        Ok(SquarefreeMonomial { n, support })
    }

    pub fn from_mask(n: usize, support: u32) -> Result<Self, IdealError> {
        check_ambient(n)?;
        if n < 32 && support >> n != 0 {
            let var = 32 - support.leading_zeros() as usize;
            return Err(IdealError::VariableOutOfRange { var, n });
        }
        Ok(SquarefreeMonomial { n, support })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u32 {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.count_ones() as usize
    }

    /// Variable indices in increasing order, 1-based.
    pub fn variables(&self) -> Vec<usize> {
        mask_vars(self.support)
    }

    pub fn divides(&self, other: &SquarefreeMonomial) -> bool {
        self.support & !other.support == 0
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support == 0 {
            return write!(f, "1");
        }
        for v in self.variables() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// 1-based variable indices of a support mask.
pub fn mask_vars(mut mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

/// Lexicographic comparison of the sorted variable lists of two supports.
pub fn lex_cmp(a: u32, b: u32) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

fn check_ambient(n: usize) -> Result<(), IdealError> {
    if n > SUPPORT_LIMIT {
        return Err(IdealError::AmbientTooLarge { n, limit: SUPPORT_LIMIT });
    }
    Ok(())
}

/// A squarefree monomial ideal given by its minimal generators.
///
/// Generators are pairwise incomparable and sorted lexicographically by their
/// variable lists. No generator is the unit monomial; an empty generator list
/// is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<u32>,
}

/// Result of `I : m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colon {
    Unit,
    Ideal(SquarefreeIdeal),
}

/// Outcome of the linear-quotients search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearQuotients {
    /// A witness ordering of the minimal generators.
    Yes(Vec<SquarefreeMonomial>),
    No,
    /// The node budget ran out before the search space was exhausted.
    Inconclusive,
}

impl LinearQuotients {
    pub fn is_yes(&self) -> bool {
        matches!(self, LinearQuotients::Yes(_))
    }
}

impl SquarefreeIdeal {
    pub fn zero(n: usize) -> Result<Self, IdealError> {
        check_ambient(n)?;
        Ok(SquarefreeIdeal { n, gens: Vec::new() })
    }

    /// Minimal generating set of the ideal generated by `supports`.
    pub fn minimalize<I>(n: usize, supports: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = u32>,
    {
        check_ambient(n)?;
        let mut all: Vec<u32> = supports.into_iter().collect();
        for &s in &all {
            if s == 0 {
                return Err(IdealError::UnitIdeal);
            }
            SquarefreeMonomial::from_mask(n, s)?;
        }
        all.sort_unstable_by_key(|s| (s.count_ones(), *s));
        all.dedup();
        let mut kept: Vec<u32> = Vec::with_capacity(all.len());
        for s in all {
            if !kept.iter().any(|&k| k & !s == 0) {
                kept.push(s);
            }
        }
        kept.sort_unstable_by(|&a, &b| lex_cmp(a, b));
        Ok(SquarefreeIdeal { n, gens: kept })
    }

    /// Convenience constructor from 1-based variable lists.
    pub fn from_supports(n: usize, supports: &[&[usize]]) -> Result<Self, IdealError> {
        let masks = supports
            .iter()
            .map(|vars| SquarefreeMonomial::new(n, vars).map(|m| m.support))
            .collect::<Result<Vec<_>, _>>()?;
        Self::minimalize(n, masks)
    }

    /// The complementary edge ideal: one generator `x_1 ... x_n / (x_i x_j)`
    /// per edge `{i, j}`.
    pub fn complementary_edge_ideal(g: &SimpleGraph) -> Result<Self, IdealError> {
        let n = g.n();
        if n < 3 {
            return Err(IdealError::DegenerateAmbient { n });
        }
        check_ambient(n)?;
        let full = full_mask(n);
        Self::minimalize(
            n,
            g.edges()
                .iter()
                .map(|&(i, j)| full & !(1 << (i - 1)) & !(1 << (j - 1))),
        )
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator_masks(&self) -> &[u32] {
        &self.gens
    }

    pub fn generators(&self) -> Vec<SquarefreeMonomial> {
        self.gens
            .iter()
            .map(|&support| SquarefreeMonomial { n: self.n, support })
            .collect()
    }

    pub fn generator_supports(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|&g| mask_vars(g)).collect()
    }

    /// Smallest generator degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.count_ones() as usize).min()
    }

    /// The common generator degree, if all generators share one.
    pub fn generation_degree(&self) -> Option<usize> {
        let d = self.indeg()?;
        self.gens
            .iter()
            .all(|g| g.count_ones() as usize == d)
            .then_some(d)
    }

    /// Membership of the squarefree monomial with support `mask`.
    pub fn contains_mask(&self, mask: u32) -> bool {
        self.gens.iter().any(|&g| g & !mask == 0)
    }

    /// All inclusion-minimal vertex sets meeting every generator support
    /// (the supports of the minimal primes), in lexicographic order.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<u32>, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal("minimal vertex covers"));
        }
        let mut found = BTreeSet::new();
        transversals(&self.gens, 0, &mut found);
        let mut out: Vec<u32> = found.into_iter().collect();
        out.sort_unstable_by(|&a, &b| lex_cmp(a, b));
        Ok(out)
    }

    /// Minimum size of a minimal vertex cover.
    pub fn height(&self) -> Result<usize, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal("height"));
        }
        // Every minimal cover has a private generator per vertex, so height
        // can be read off the full transversal list.
        Ok(self
            .minimal_vertex_covers()?
            .iter()
            .map(|c| c.count_ones() as usize)
            .min()
            .expect("a nonzero proper ideal has a cover"))
    }

    /// The ideal generated by the minimal vertex covers.
    pub fn alexander_dual(&self) -> Result<Self, IdealError> {
        let covers = self
            .minimal_vertex_covers()
            .map_err(|_| IdealError::ZeroIdeal("Alexander dual"))?;
        Self::minimalize(self.n, covers)
    }

    /// `I : m`, with generators `supp(g) \ supp(m)` minimalized.
    pub fn colon_by_monomial(&self, m: &SquarefreeMonomial) -> Result<Colon, IdealError> {
        if m.n != self.n {
            return Err(IdealError::AmbientMismatch { left: self.n, right: m.n });
        }
        let reduced: Vec<u32> = self.gens.iter().map(|&g| g & !m.support).collect();
        if reduced.contains(&0) {
            return Ok(Colon::Unit);
        }
        Ok(Colon::Ideal(Self::minimalize(self.n, reduced)?))
    }

    /// Ideal generated by the squarefree degree-`d` monomials of `I`.
    pub fn squarefree_component(&self, d: usize) -> Result<Self, IdealError> {
        if d == 0 || d > self.n {
            return Err(IdealError::InvalidDegree { d, n: self.n });
        }
        let full = full_mask(self.n);
        let mut out = BTreeSet::new();
        for &g in &self.gens {
            let k = g.count_ones() as usize;
            if k > d {
                continue;
            }
            let free = mask_vars(full & !g);
            for_each_combination(&free, d - k, &mut |extra| {
                out.insert(g | extra);
            });
        }
        Self::minimalize(self.n, out)
    }

    /// Searches for a linear-quotients order `u_1, ..., u_m`: each colon
    /// `(u_1, ..., u_{j-1}) : u_j` must be generated by variables.
    ///
    /// Only degree-nondecreasing orders are explored. The colon condition for
    /// `u_j` depends on the set of earlier generators only, so dead prefix
    /// sets are memoized.
    pub fn has_linear_quotients(&self, budget: u64) -> Result<LinearQuotients, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal("linear quotients"));
        }
        let mut search = LqSearch {
            gens: &self.gens,
            budget,
            nodes: 0,
            exhausted: false,
            dead: HashSet::new(),
            chosen: Vec::with_capacity(self.gens.len()),
            used: vec![0u64; self.gens.len().div_ceil(64)],
        };
        if search.extend() {
            let order = search
                .chosen
                .iter()
                .map(|&k| SquarefreeMonomial { n: self.n, support: self.gens[k] })
                .collect();
            Ok(LinearQuotients::Yes(order))
        } else if search.exhausted {
            Ok(LinearQuotients::Inconclusive)
        } else {
            Ok(LinearQuotients::No)
        }
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Branch on the vertices of the first generator missed by `current`,
/// pruning partial sets in which some vertex has lost every private
/// generator (privacy can only shrink as the set grows).
fn transversals(gens: &[u32], current: u32, out: &mut BTreeSet<u32>) {
    let Some(&missed) = gens.iter().find(|&&g| g & current == 0) else {
        out.insert(current);
        return;
    };
    let mut rest = missed;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let next = current | bit;
        if every_vertex_private(gens, next) {
            transversals(gens, next, out);
        }
    }
}

fn every_vertex_private(gens: &[u32], set: u32) -> bool {
    let mut private = 0u32;
    for &g in gens {
        let hit = g & set;
        if hit.count_ones() == 1 {
            private |= hit;
        }
    }
    private == set
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(u32)) {
    fn go(items: &[usize], k: usize, start: usize, acc: u32, f: &mut dyn FnMut(u32)) {
        if k == 0 {
            f(acc);
            return;
        }
        for i in start..=items.len() - k {
            go(items, k - 1, i + 1, acc | 1 << (items[i] - 1), f);
        }
    }
    if k <= items.len() {
        go(items, k, 0, 0, f);
    }
}

struct LqSearch<'a> {
    gens: &'a [u32],
    budget: u64,
    nodes: u64,
    exhausted: bool,
    dead: HashSet<Vec<u64>>,
    chosen: Vec<usize>,
    used: Vec<u64>,
}

impl LqSearch<'_> {
    fn is_used(&self, k: usize) -> bool {
        self.used[k / 64] >> (k % 64) & 1 == 1
    }

    fn toggle(&mut self, k: usize) {
        self.used[k / 64] ^= 1 << (k % 64);
    }

    fn colon_is_linear(&self, k: usize) -> bool {
        let u = self.gens[k];
        let reduced: Vec<u32> = self.chosen.iter().map(|&i| self.gens[i] & !u).collect();
        // Minimal generators of the colon are all single variables iff every
        // reduced support contains some singleton reduced support.
        let singles: u32 = reduced
            .iter()
            .filter(|r| r.count_ones() == 1)
            .fold(0, |acc, r| acc | r);
        reduced.iter().all(|&r| r & singles != 0)
    }

    fn extend(&mut self) -> bool {
        if self.chosen.len() == self.gens.len() {
            return true;
        }
        if self.dead.contains(&self.used) {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        let floor = self
            .chosen
            .iter()
            .map(|&i| self.gens[i].count_ones())
            .max()
            .unwrap_or(0);
        let mut candidates: Vec<usize> = (0..self.gens.len())
            .filter(|&k| !self.is_used(k) && self.gens[k].count_ones() >= floor)
            .collect();
        candidates.sort_by_key(|&k| self.gens[k].count_ones());
        for k in candidates {
            if !self.colon_is_linear(k) {
                continue;
            }
            self.chosen.push(k);
            self.toggle(k);
            if self.extend() {
                return true;
            }
            self.toggle(k);
            self.chosen.pop();
            if self.exhausted {
                return false;
            }
        }
        self.dead.insert(self.used.clone());
        false
    }
}

impl Serialize for SquarefreeIdeal {
    /// `{"n": .., "generators": [[sorted variables], ..]}`, generators in
    /// lexicographic order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SquarefreeIdeal", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("generators", &self.generator_supports())?;
        st.end()
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
