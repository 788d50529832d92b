//! Graded Betti numbers of `S/I` via Hochster's formula.

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::complex::{nonface_table, reduced_homology_of_faces, FieldTag};
use crate::error::{IdealError, OracleError};
use crate::ideal::{lex_cmp, SquarefreeIdeal};

/// Largest ambient `n` the oracle accepts (it visits all `2^n` subsets).
pub const ORACLE_LIMIT: usize = 14;

/// `β_{i,j}(S/I)`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldTag,
    entries: BTreeMap<(usize, usize), u64>,
}

/// Regularity and projective dimension of `S/I` and of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RegPd {
    pub reg_quotient: usize,
    pub pd_quotient: usize,
    pub reg_ideal: usize,
    pub pd_ideal: usize,
}

impl BettiTable {
    pub fn from_entries<I>(n: usize, field: FieldTag, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let entries = entries.into_iter().filter(|&(_, v)| v != 0).collect();
        BettiTable { n, field, entries }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti numbers `β_i = sum_j β_{i,j}`, indexed by `i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&(i, _), &v) in &self.entries {
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += v;
        }
        out
    }

    /// `reg(S/I) = max(j - i)`, `pd(S/I) = max i`; `reg(I) = reg(S/I) + 1`,
    /// `pd(I) = pd(S/I) - 1`.
    pub fn reg_pd(&self) -> Result<RegPd, OracleError> {
        // Only β_{0,0} (or nothing) means there is no ideal to speak of.
        if self.entries.keys().all(|&(i, _)| i == 0) {
            return Err(OracleError::EmptyTable);
        }
        let reg_quotient = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let pd_quotient = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        Ok(RegPd {
            reg_quotient,
            pd_quotient,
            reg_ideal: reg_quotient + 1,
            pd_ideal: pd_quotient - 1,
        })
    }

    /// Macaulay2-style grid: row `r` holds `β_{i, i + r}` for `i = 0..=pd`.
    pub fn grid(&self) -> Vec<Vec<u64>> {
        let pd = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let reg = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        (0..=reg)
            .map(|r| (0..=pd).map(|i| self.get(i, i + r)).collect())
            .collect()
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let grid = self.grid();
        let width = grid.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        write!(f, "{:>4}", "")?;
        for i in 0..grid.first().map_or(0, Vec::len) {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        for (r, row) in grid.iter().enumerate() {
            write!(f, "{r:>3}:")?;
            for v in row {
                if *v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {v:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for BettiTable {
    /// `{"n", "field", "betti": [{"i", "j", "value"}, ..]}` sorted by `(i, j)`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            value: u64,
        }
        let betti: Vec<Entry> = self
            .entries()
            .map(|((i, j), value)| Entry { i, j, value })
            .collect();
        let mut st = serializer.serialize_struct("BettiTable", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("betti", &betti)?;
        st.end()
    }
}

/// `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|_σ)` summed over `|σ| = j`, where `Δ` is
/// the Stanley-Reisner complex of `I`.
///
/// Subsets `σ` that are nonempty faces restrict to a full simplex and are
/// skipped; `σ = ∅` contributes `β_{0,0} = 1` through `H̃_{-1}({∅})`.
pub fn hochster_betti(ideal: &SquarefreeIdeal, field: FieldTag) -> Result<BettiTable, OracleError> {
    let n = ideal.ambient();
    if n > ORACLE_LIMIT {
        return Err(OracleError::TooLarge { n, limit: ORACLE_LIMIT });
    }
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal("Betti numbers").into());
    }
    if ideal.generator_masks().contains(&0) {
        return Err(IdealError::UnitIdeal.into());
    }
    let nonface = nonface_table(ideal);
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    let mut faces: Vec<u32> = Vec::new();
    for sigma in 1u32..1 << n {
        if !nonface[sigma as usize] {
            continue;
        }
        faces.clear();
        let mut sub = sigma;
        loop {
            sub = (sub.wrapping_sub(1)) & sigma;
            if !nonface[sub as usize] {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
        }
        faces.sort_unstable_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
        let h = reduced_homology_of_faces(&faces, field);
        let size = sigma.count_ones() as usize;
        for (idx, &d) in h.dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // idx = k + 1 for H̃_k; i = |σ| - k - 1 = |σ| - idx.
            *entries.entry((size - idx, size)).or_insert(0) += d as u64;
        }
    }
    Ok(BettiTable { n, field, entries })
}
