//! Simplicial complexes on `{1, ..., n}` with faces as bit masks, and their
//! reduced homology over GF(2) or Q.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::rank::{rank_gf2, rank_rational};
use crate::error::{IdealError, OracleError};
use crate::ideal::{lex_cmp, mask_vars, SquarefreeIdeal, SUPPORT_LIMIT};

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    #[default]
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "q")]
    Rationals,
}

impl FieldTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            FieldTag::Gf2 => "gf2",
            FieldTag::Rationals => "q",
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gf2" => Ok(FieldTag::Gf2),
            "q" => Ok(FieldTag::Rationals),
            other => Err(format!("unknown field `{other}` (expected gf2 or q)")),
        }
    }
}

/// A downward-closed family of faces. The void complex has no faces at all;
/// the irrelevant complex is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted by (cardinality, lexicographic order).
    faces: Vec<u32>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![0] }
    }

    /// Downward closure of the given facets.
    pub fn from_facets<I: IntoIterator<Item = u32>>(n: usize, facets: I) -> Self {
        let mut all = BTreeSet::new();
        for f in facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        Self::from_sorted_faces(n, all.into_iter().collect())
    }

    fn from_sorted_faces(n: usize, mut faces: Vec<u32>) -> Self {
        faces.sort_unstable_by(|&a, &b| a.count_ones().cmp(&b.count_ones()).then(lex_cmp(a, b)));
        SimplicialComplex { n, faces }
    }

    /// The Stanley-Reisner complex: supports of squarefree monomials not in `I`.
    pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> Result<Self, OracleError> {
        if ideal.is_zero() {
            return Err(IdealError::ZeroIdeal("Stanley-Reisner complex").into());
        }
        let n = ideal.ambient();
        if n > SUPPORT_LIMIT {
            return Err(OracleError::TooLarge { n, limit: SUPPORT_LIMIT });
        }
        let nonface = nonface_table(ideal);
        let faces = (0u32..1 << n).filter(|&m| !nonface[m as usize]).collect();
        Ok(Self::from_sorted_faces(n, faces))
    }

    pub fn ground(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|&f| mask_vars(f)).collect()
    }

    pub fn contains(&self, face: u32) -> bool {
        self.faces.contains(&face)
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<u32> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| !self.faces.iter().any(|&g| g != f && f & !g == 0))
            .collect()
    }

    /// Dimension (`-1` for `{∅}`); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.last().map(|f| f.count_ones() as isize - 1)
    }

    /// The induced subcomplex on the vertex set `sigma`.
    pub fn restrict(&self, sigma: u32) -> Self {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().copied().filter(|f| f & !sigma == 0).collect(),
        }
    }

    /// Face counts by cardinality `0..=dim+1` (`f_{-1}, f_0, ...`).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &f in &self.faces {
            let c = f.count_ones() as usize;
            if out.len() <= c {
                out.resize(c + 1, 0);
            }
            out[c] += 1;
        }
        out
    }

    pub fn reduced_homology(&self, field: FieldTag) -> ReducedHomology {
        reduced_homology_of_faces(&self.faces, field)
    }

    /// Dimensions of reduced homology, index 0 holding `H̃_{-1}`.
    pub fn reduced_homology_dims(&self, field: FieldTag) -> Vec<usize> {
        self.reduced_homology(field).dims
    }
}

/// `nonface[m]` iff some generator support is contained in `m`.
pub(crate) fn nonface_table(ideal: &SquarefreeIdeal) -> Vec<bool> {
    let n = ideal.ambient();
    let mut table = vec![false; 1 << n];
    for &g in ideal.generator_masks() {
        table[g as usize] = true;
    }
    for bit in 0..n {
        let b = 1usize << bit;
        for m in 0..table.len() {
            if m & b != 0 && table[m ^ b] {
                table[m] = true;
            }
        }
    }
    table
}

/// Reduced homology dimensions `H̃_{-1}, H̃_0, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    pub dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_k`, zero outside the computed range.
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.dims.get(i).copied())
            .unwrap_or(0)
    }
}

/// Reduced homology of the complex whose faces are `faces` (sorted by
/// cardinality, each layer sorted lexicographically). The chain complex
/// includes the empty face in degree `-1`.
pub(crate) fn reduced_homology_of_faces(faces: &[u32], field: FieldTag) -> ReducedHomology {
    if faces.is_empty() {
        return ReducedHomology { dims: vec![0] };
    }
    let mut layers: Vec<&[u32]> = Vec::new();
    let mut start = 0;
    while start < faces.len() {
        let c = faces[start].count_ones() as usize;
        debug_assert_eq!(c, layers.len(), "faces must be downward closed and sorted");
        let end = start + faces[start..].iter().take_while(|f| f.count_ones() as usize == c).count();
        layers.push(&faces[start..end]);
        start = end;
    }
    // ranks[c] = rank of the boundary from cardinality c to c - 1.
    let mut ranks = vec![0usize; layers.len() + 1];
    for c in 1..layers.len() {
        ranks[c] = boundary_rank(layers[c], layers[c - 1], field);
    }
    let dims = (0..layers.len())
        .map(|c| layers[c].len() - ranks[c] - ranks[c + 1])
        .collect();
    ReducedHomology { dims }
}

fn boundary_rank(upper: &[u32], lower: &[u32], field: FieldTag) -> usize {
    let index = |f: u32| {
        lower
            .binary_search_by(|&g| lex_cmp(g, f))
            .expect("boundary face present in a downward-closed complex")
    };
    match field {
        FieldTag::Gf2 => {
            let words = lower.len().div_ceil(64);
            let rows = upper
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; words];
                    let mut rest = f;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        let k = index(f ^ bit);
                        row[k / 64] |= 1 << (k % 64);
                    }
                    row
                })
                .collect();
            rank_gf2(rows)
        }
        FieldTag::Rationals => {
            let rows: Vec<Vec<(usize, i64)>> = upper
                .iter()
                .map(|&f| {
                    let mut row = Vec::with_capacity(f.count_ones() as usize);
                    let mut rest = f;
                    let mut sign = 1i64;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        row.push((index(f ^ bit), sign));
                        sign = -sign;
                    }
                    row
                })
                .collect();
            rank_rational(&rows, lower.len())
        }
    }
}
