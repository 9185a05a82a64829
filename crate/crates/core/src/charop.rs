//! Operations on characters as value vectors: inner products, induction,
//! restriction, tensor products, and wreath product dimension combinatorics.
//!
//! A character here is a `Vec<Cyclotomic>` indexed like the rows of its
//! `CharTable`. Induction and restriction move vectors along a fusion map as
//! produced by `class_fusion`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::partitions::{hook_length_degree, partitions};
use crate::table::CharTable;

/// Hermitian inner product of two class functions on `table`:
/// (1/|G|) Σ_j |class j| · a_j · conj(b_j).
///
/// The result of pairing two characters is a non-negative integer; an
/// irrational outcome means the inputs were not class functions of this
/// table and is reported as an error.
pub fn inner_product(table: &CharTable, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<BigRational> {
    let k = table.n_classes();
    if a.len() != k || b.len() != k {
        return Err(Error::TableMismatch(format!(
            "class functions of lengths {} and {} on a table with {} classes",
            a.len(),
            b.len(),
            k
        )));
    }
    let mut sum = Cyclotomic::zero();
    for j in 0..k {
        let size = BigRational::from_integer(BigInt::from(table.class_sizes[j]));
        sum = sum.add(&a[j].mul(&b[j].conj()).scale(&size));
    }
    let avg = sum.scale(&BigRational::new(BigInt::one(), BigInt::from(table.order)));
    avg.as_rational()
        .cloned()
        .ok_or_else(|| Error::Verification("inner product of class functions is irrational".into()))
}

/// Inner products of `v` against every irreducible row of the table, in row
/// order. For a character these are its irreducible multiplicities.
pub fn multiplicities(table: &CharTable, v: &[Cyclotomic]) -> Result<Vec<BigRational>> {
    table
        .values
        .iter()
        .map(|row| inner_product(table, v, row))
        .collect()
}

/// Like `multiplicities`, but insists every coefficient is an integer, as it
/// must be when `v` is a virtual character.
pub fn integral_multiplicities(table: &CharTable, v: &[Cyclotomic]) -> Result<Vec<BigInt>> {
    multiplicities(table, v)?
        .into_iter()
        .enumerate()
        .map(|(t, q)| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::Verification(format!(
                    "multiplicity of row {t} is not an integer: {q}"
                )))
            }
        })
        .collect()
}

/// Induce a character of the subgroup up to the big group along `fusion`
/// (the image class in `big` of each class of `sub`).
///
/// The value at a class j of the big group is
/// |C_G(g_j)| · Σ over sub-classes i fusing into j of χ(h_i)/|C_H(h_i)|,
/// where the centralizer orders come from the class sizes. Classes hit by no
/// sub-class get 0. Every value is checked to be an algebraic integer.
pub fn induce(
    sub: &CharTable,
    chi: &[Cyclotomic],
    big: &CharTable,
    fusion: &[usize],
) -> Result<Vec<Cyclotomic>> {
    if chi.len() != sub.n_classes() || fusion.len() != sub.n_classes() {
        return Err(Error::TableMismatch(format!(
            "character of length {} and fusion of length {} on a table with {} classes",
            chi.len(),
            fusion.len(),
            sub.n_classes()
        )));
    }
    if fusion.iter().any(|&j| j >= big.n_classes()) {
        return Err(Error::TableMismatch(
            "fusion map points outside the big table".into(),
        ));
    }
    let sub_order = BigInt::from(sub.order);
    let big_order = BigInt::from(big.order);
    let mut out = vec![Cyclotomic::zero(); big.n_classes()];
    for (i, &j) in fusion.iter().enumerate() {
        // χ(h_i) / |C_H(h_i)| = χ(h_i) · |class i| / |H|
        let w = BigRational::new(BigInt::from(sub.class_sizes[i]), sub_order.clone());
        out[j] = out[j].add(&chi[i].scale(&w));
    }
    for (j, v) in out.iter_mut().enumerate() {
        // |C_G(g_j)| = |G| / |class j|
        let c = BigRational::new(big_order.clone(), BigInt::from(big.class_sizes[j]));
        *v = v.scale(&c);
        if !v.is_integral() {
            return Err(Error::Verification(format!(
                "induced value at class {j} is not an algebraic integer"
            )));
        }
    }
    Ok(out)
}

/// Restrict a character of the big group to the subgroup: pull values back
/// along the fusion map.
pub fn restrict(big_values: &[Cyclotomic], fusion: &[usize]) -> Result<Vec<Cyclotomic>> {
    fusion
        .iter()
        .map(|&j| {
            big_values.get(j).cloned().ok_or_else(|| {
                Error::TableMismatch("fusion map points outside the value vector".into())
            })
        })
        .collect()
}

/// Pointwise product of two characters over the same table.
pub fn tensor(a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    if a.len() != b.len() {
        return Err(Error::TableMismatch(format!(
            "tensor factors of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
}

/// True iff every irreducible of the table has all-rational values and
/// Frobenius-Schur indicator +1.
pub fn rational_fs_positive(table: &CharTable) -> Result<bool> {
    if !table.is_rational() {
        return Ok(false);
    }
    for t in 0..table.values.len() {
        if table.frobenius_schur_indicator(t)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree data of a wreath product base: the list of irreducible degrees of
/// the base group and the wreath exponent n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathSpec {
    pub dims: Vec<u64>,
    pub n: u32,
}

impl WreathSpec {
    pub fn new(dims: Vec<u64>, n: u32) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d == 0) {
            return Err(Error::Precondition(
                "base degree list must be non-empty and positive".into(),
            ));
        }
        Ok(WreathSpec { dims, n })
    }

    pub fn k(&self) -> usize {
        self.dims.len()
    }

    /// Order of the base group, recovered as the sum of squared degrees.
    pub fn base_order(&self) -> u64 {
        self.dims.iter().map(|&d| d * d).sum()
    }
}

/// Dimension multiset attached to the wreath product of the base group by
/// Sym(n), indexed over pairs (a, ν): a composition a of n into k parts and
/// an irreducible ν of the Young subgroup Sym(a_1) x ... x Sym(a_k), that is
/// a tuple of partitions λ_i of a_i. Each pair contributes
///
///   [Sym(n) : P_a] · Π_i dim(λ_i)
///
/// with the symmetric group dimensions by hook lengths. The squares of the
/// emitted numbers sum to n!·k^n. When every base degree is 1 these are
/// exactly the irreducible degrees of the wreath product; the emission rule
/// deliberately carries no power of the base degrees.
pub fn wreath_irreducible_dims(spec: &WreathSpec) -> Vec<u128> {
    let k = spec.k();
    let n = spec.n;
    // Partitions and their hook dimensions for every possible part size.
    let part_dims: Vec<Vec<u128>> = (0..=n)
        .map(|m| {
            partitions(m)
                .iter()
                .map(|l| hook_length_degree(l))
                .collect()
        })
        .collect();
    let factorial: Vec<u128> = {
        let mut f = vec![1u128; n as usize + 1];
        for i in 1..=n as usize {
            f[i] = f[i - 1] * i as u128;
        }
        f
    };
    let mut out = Vec::new();
    let mut composition = vec![0u32; k];
    emit(&mut composition, 0, n, &part_dims, &factorial, &mut out);
    out.sort_unstable();
    out
}

fn emit(
    composition: &mut [u32],
    pos: usize,
    remaining: u32,
    part_dims: &[Vec<u128>],
    factorial: &[u128],
    out: &mut Vec<u128>,
) {
    let k = composition.len();
    if pos == k {
        if remaining != 0 {
            return;
        }
        let n = composition.iter().sum::<u32>() as usize;
        let mut index = factorial[n];
        for &a in composition.iter() {
            index /= factorial[a as usize];
        }
        // Product over choices of one partition dimension per coordinate.
        let mut products = vec![1u128];
        for &a in composition.iter() {
            let mut next = Vec::with_capacity(products.len() * part_dims[a as usize].len());
            for &p in &products {
                for &d in &part_dims[a as usize] {
                    next.push(p * d);
                }
            }
            products = next;
        }
        out.extend(products.into_iter().map(|p| index * p));
        return;
    }
    if pos == k - 1 {
        composition[pos] = remaining;
        emit(composition, pos + 1, 0, part_dims, factorial, out);
        composition[pos] = 0;
        return;
    }
    for a in 0..=remaining {
        composition[pos] = a;
        emit(
            composition,
            pos + 1,
            remaining - a,
            part_dims,
            factorial,
            out,
        );
        composition[pos] = 0;
    }
}
