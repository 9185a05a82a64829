//! Symmetric-group characters via the Murnaghan-Nakayama rule, and the
//! odd-multiplicity matrix of their restrictions to a Sylow 2-subgroup.
//!
//! This is an engine-independent check: character values of Sym_n come out of
//! the combinatorial border-strip recursion here, never out of the generic
//! table builder, so agreement between the two is meaningful.
//!
//! Class and row orders are fixed so matrices are reproducible:
//! cycle-type classes of Sym_n are listed in lexicographically increasing
//! part-vector order (identity type 1^n first, the n-cycle last), and parity
//! matrix rows follow `partitions(n)` order (the trivial character's label
//! `[n]` first, the sign character's `[1,...,1]` last).

use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use crate::charop::integral_multiplicities;
use crate::cyclo::Cyclotomic;
use crate::error::Result;
use crate::group::PermGroup;
use crate::partitions::{hook_length_degree, partitions};
use crate::sylow::sylow2_symmetric;
use crate::table::CharTable;

/// Cycle types of Sym_n as partitions of n, lexicographically increasing.
pub fn cycle_types(n: u32) -> Vec<Vec<u32>> {
    let mut list = partitions(n);
    list.reverse();
    list
}

/// Border strips of length `r` removable from `lambda`, as the smaller
/// partition left behind together with the parity of the strip's height.
///
/// Works on the beta-set `beta_i = lambda_i + (m-1-i)`: removing a strip of
/// length r means lowering one beta value by r onto a free slot, and the
/// strip's height is the number of beta values jumped over.
fn strip_removals(lambda: &[u32], r: u32) -> Vec<(Vec<u32>, bool)> {
    let m = lambda.len();
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (m - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(r) else {
            continue;
        };
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let mut shrunk: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (m - 1 - j) as u32)
            .collect();
        shrunk.retain(|&p| p > 0);
        out.push((shrunk, height % 2 == 1));
    }
    out
}

fn mn_recurse(lambda: &[u32], rho: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if lambda.is_empty() {
        debug_assert!(rho.is_empty());
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let mut total = 0i64;
    for (shrunk, odd_height) in strip_removals(lambda, r) {
        let term = mn_recurse(&shrunk, rest, memo);
        total += if odd_height { -term } else { term };
    }
    memo.insert(key, total);
    total
}

/// One character value of Sym_n: chi_lambda at the class of cycle type `rho`.
pub fn mn_value(lambda: &[u32], rho: &[u32]) -> i64 {
    assert_eq!(
        lambda.iter().sum::<u32>(),
        rho.iter().sum::<u32>(),
        "partition and cycle type must have the same weight"
    );
    mn_recurse(lambda, rho, &mut HashMap::new())
}

/// All values of chi_lambda, indexed by `cycle_types(n)`.
///
/// Asserts the identity-class value against the hook-length degree, so the
/// recursion and the product formula check each other on every call.
pub fn mn_character(lambda: &[u32]) -> Vec<i64> {
    let n = lambda.iter().sum::<u32>();
    let mut memo = HashMap::new();
    let values: Vec<i64> = cycle_types(n)
        .iter()
        .map(|rho| mn_recurse(lambda, rho, &mut memo))
        .collect();
    debug_assert_eq!(values[0] as u128, hook_length_degree(lambda));
    values
}

/// The odd-multiplicity pattern of Irr(Sym_n) restricted to a Sylow
/// 2-subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityMatrix {
    pub n: u32,
    /// Row labels: partitions of n, in `partitions(n)` order.
    pub row_labels: Vec<Vec<u32>>,
    pub sylow_order: u128,
    /// `matrix[r][c]` is 1 when the restriction of the r-th character
    /// contains the c-th Sylow irreducible with odd multiplicity.
    pub matrix: Vec<Vec<u8>>,
}

impl ParityMatrix {
    pub fn n_rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn n_cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }
}

/// True when every row of the 0/1 matrix has at least one nonzero entry.
pub fn one_in_each_row(matrix: &[Vec<u8>]) -> bool {
    matrix.iter().all(|row| row.iter().any(|&x| x != 0))
}

/// Restriction parities against the standard Sylow 2-subgroup of Sym_n.
pub fn parity_matrix(n: u32, budget: u128) -> Result<ParityMatrix> {
    let sylow = sylow2_symmetric(n as usize)?;
    parity_matrix_with(n, &sylow, budget)
}

/// Same computation against a caller-supplied Sylow 2-subgroup of Sym_n.
/// Column order follows that subgroup's character table, so two conjugate
/// choices agree up to a column permutation.
pub(crate) fn parity_matrix_with(n: u32, sylow: &PermGroup, budget: u128) -> Result<ParityMatrix> {
    let table = CharTable::build(sylow, budget)?;
    let types = cycle_types(n);
    let type_index: HashMap<&[u32], usize> = types
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    // Which cycle type each Sylow class sits in, as an index into `types`.
    let class_type: Vec<usize> = table
        .class_reps
        .iter()
        .map(|rep| {
            let mut t: Vec<u32> = rep.cycle_type().iter().map(|&l| l as u32).collect();
            let seen: u32 = t.iter().sum();
            t.extend(std::iter::repeat(1).take((n - seen) as usize));
            t.sort_unstable_by(|a, b| b.cmp(a));
            type_index[t.as_slice()]
        })
        .collect();
    let row_labels = partitions(n);
    let matrix: Vec<Vec<u8>> = row_labels
        .par_iter()
        .map(|lambda| {
            let chi = mn_character(lambda);
            let restricted: Vec<Cyclotomic> = class_type
                .iter()
                .map(|&ti| Cyclotomic::from_integer(chi[ti]))
                .collect();
            let mults = integral_multiplicities(&table, &restricted)?;
            Ok(mults
                .iter()
                .map(|m| if m.is_odd() { 1 } else { 0 })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(ParityMatrix {
        n,
        row_labels,
        sylow_order: sylow.order(),
        matrix,
    })
}

impl std::fmt::Display for ParityMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "n = {}: {} characters x {} Sylow irreducibles",
            self.n,
            self.n_rows(),
            self.n_cols()
        )?;
        for (label, row) in self.row_labels.iter().zip(&self.matrix) {
            let cells: String = row
                .iter()
                .map(|&x| if x == 1 { '1' } else { '.' })
                .collect();
            writeln!(f, "  {label:?} {cells}")?;
        }
        Ok(())
    }
}
