//! Closed-form degeneracy profile of an n-fermion sector.
//!
//! Within one parity sector at generic (gamma, h), a level is fixed by how
//! many (-k, +k) pairs are doubly excited and which pairs are singly
//! excited; each singly excited pair contributes a factor of 2 in
//! degeneracy, so all degeneracy degrees are powers of 4.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Degeneracy structure of the n-fermion levels of one parity sector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyProfile {
    pub n_sites: usize,
    pub n_fermions: usize,
    /// Degeneracy degree 4^j -> number of distinct levels with that degree.
    /// Zero-count entries are omitted.
    pub counts: BTreeMap<u64, u64>,
}

impl DegeneracyProfile {
    /// Total number of levels counted with multiplicity; the sum rule says
    /// this equals C(N, n).
    pub fn total_levels(&self) -> u64 {
        self.counts.iter().map(|(degree, count)| degree * count).sum()
    }

    /// C(N, n), the dimension of the n-fermion sector.
    pub fn sector_dimension(&self) -> u64 {
        binomial(self.n_sites as u64, self.n_fermions as u64)
    }

    /// CSV rows `n_sites,n_fermions,degree,count` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n_sites,n_fermions,degree,count\n");
        for (degree, count) in &self.counts {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.n_sites, self.n_fermions, degree, count
            ));
        }
        out
    }
}

/// Exact binomial coefficient.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of 4^j-fold degenerate levels in the n-fermion sector:
/// C(N/2, n/2 - j) * C(N/2 - (n/2 - j), 2j) for each admissible j.
pub fn degeneracy_profile(n_sites: usize, n_fermions: usize) -> Result<DegeneracyProfile> {
    if n_sites < 2 || n_sites % 2 != 0 {
        return Err(Error::InvalidModel(format!(
            "n_sites must be even and >= 2, got {n_sites}"
        )));
    }
    if n_fermions % 2 != 0 {
        return Err(Error::UnsupportedSector(format!(
            "degeneracy profile is defined for even fermion numbers, got {n_fermions}"
        )));
    }
    if n_fermions > n_sites {
        return Err(Error::InvalidModel(format!(
            "n_fermions {n_fermions} exceeds n_sites {n_sites}"
        )));
    }
    let half = (n_sites / 2) as u64;
    let half_n = (n_fermions / 2) as u64;
    let mut counts = BTreeMap::new();
    for j in 0..=half_n {
        let full_pairs = half_n - j;
        let count = binomial(half, full_pairs) * binomial(half - full_pairs, 2 * j);
        if count > 0 {
            counts.insert(4u64.pow(j as u32), count);
        }
    }
    Ok(DegeneracyProfile {
        n_sites,
        n_fermions,
        counts,
    })
}
