//! Exact irreducible character tables.
//!
//! The table is computed modulo a prime first: for a prime p = 1 mod exp(G)
//! with p > 2 sqrt(|G|) and p coprime to |G|, the class algebra over F_p is
//! split semisimple, and the columns of the character table (scaled to class
//! algebra eigenvalues) are the common eigenvectors of the class matrices.
//! Simultaneous eigenspace splitting finds them; the eigenvalue data then
//! determines each character degree, and a discrete Fourier inversion along
//! the power map lifts every value to an exact cyclotomic number, which is
//! possible because multiplicities of root-of-unity eigenvalues are bounded
//! by the degree, hence below p.
//!
//! A computed table is never returned unverified: both orthogonality
//! relations are checked by exact cyclotomic arithmetic, along with degree
//! and integrality constraints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::arith::{addmod, invmod, is_prime, mulmod, powmod, primitive_root, submod};
use crate::classes::ClassData;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct CharTable {
    /// Degree of the underlying permutation representation.
    pub degree: usize,
    pub order: u128,
    pub exponent: u64,
    /// Canonical class representatives, identity first; classes are ordered
    /// by (element order, class size, representative images).
    pub class_reps: Vec<Permutation>,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    /// power_rows[j][l] is the class of the l-th power of representative j,
    /// for l up to the representative's order.
    pub power_rows: Vec<Vec<u32>>,
    /// values[t][j] is the t-th irreducible character at class j; rows are
    /// sorted by degree, then by descending value vector, so the trivial
    /// character is the first row of its degree block.
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharTable {
    pub fn build(group: &PermGroup, budget: u128) -> Result<CharTable> {
        let cd = ClassData::new(group, budget)?;
        build_from_classes(&cd)
    }

    pub fn n_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.values
            .iter()
            .map(|row| {
                let d = row[0].as_rational().expect("degrees are rational");
                debug_assert!(d.is_integer());
                u64::try_from(d.to_integer()).expect("degree fits u64")
            })
            .collect()
    }

    /// Index of the all-ones row.
    pub fn trivial_row(&self) -> usize {
        self.values
            .iter()
            .position(|row| row.iter().all(|v| v.is_one()))
            .expect("every table contains the trivial character")
    }

    pub fn is_rational(&self) -> bool {
        self.values
            .iter()
            .all(|row| row.iter().all(|v| v.is_rational()))
    }

    /// Frobenius-Schur indicator of row t: the average over classes of the
    /// character at the class of the squared representative. Always -1, 0,
    /// or +1 for an irreducible character.
    pub fn frobenius_schur_indicator(&self, t: usize) -> Result<i8> {
        let mut sum = Cyclotomic::zero();
        for j in 0..self.n_classes() {
            let l = 2 % self.element_orders[j] as usize;
            let sq_class = self.power_rows[j][l] as usize;
            let size = BigRational::from_integer(BigInt::from(self.class_sizes[j]));
            sum = sum.add(&self.values[t][sq_class].scale(&size));
        }
        let avg = sum.scale(&BigRational::new(BigInt::one(), BigInt::from(self.order)));
        let q = avg
            .as_rational()
            .ok_or_else(|| Error::Verification(format!("indicator of row {t} is irrational")))?;
        if !q.is_integer() {
            return Err(Error::Verification(format!(
                "indicator of row {t} is not an integer: {q}"
            )));
        }
        match i64::try_from(q.to_integer()) {
            Ok(v @ (-1 | 0 | 1)) => Ok(v as i8),
            _ => Err(Error::Verification(format!(
                "indicator of row {t} out of range: {q}"
            ))),
        }
    }

    /// Exact re-verification of everything cheap to state: class data
    /// consistency, degree constraints, integrality, and both orthogonality
    /// relations.
    pub fn verify(&self) -> Result<()> {
        let k = self.n_classes();
        if self.values.len() != k {
            return Err(Error::Verification(format!(
                "{} characters against {} classes",
                self.values.len(),
                k
            )));
        }
        if self.class_sizes.iter().map(|&s| s as u128).sum::<u128>() != self.order {
            return Err(Error::Verification(
                "class sizes do not sum to the order".into(),
            ));
        }
        let mut degree_sq_sum: u128 = 0;
        for (t, row) in self.values.iter().enumerate() {
            let d = row[0]
                .as_rational()
                .filter(|d| d.is_integer() && d.is_positive())
                .ok_or_else(|| {
                    Error::Verification(format!("degree of row {t} is not a positive integer"))
                })?
                .to_integer();
            let d = u64::try_from(d)
                .map_err(|_| Error::Verification(format!("degree of row {t} overflows")))?;
            if self.order % d as u128 != 0 {
                return Err(Error::Verification(format!(
                    "degree {d} of row {t} does not divide the group order"
                )));
            }
            degree_sq_sum += (d as u128) * (d as u128);
            for (j, v) in row.iter().enumerate() {
                if !v.is_integral() {
                    return Err(Error::Verification(format!(
                        "value at row {t}, class {j} is not an algebraic integer"
                    )));
                }
            }
        }
        if degree_sq_sum != self.order {
            return Err(Error::Verification(format!(
                "degree squares sum to {degree_sq_sum}, not the group order {}",
                self.order
            )));
        }
        let order_q = BigRational::from_integer(BigInt::from(self.order));
        // Rows: sum over classes of |C_j| chi_s(g_j) conj(chi_t(g_j)).
        for s in 0..k {
            for t in s..k {
                let mut sum = Cyclotomic::zero();
                for j in 0..k {
                    let size = BigRational::from_integer(BigInt::from(self.class_sizes[j]));
                    let prod = self.values[s][j].mul(&self.values[t][j].conj());
                    sum = sum.add(&prod.scale(&size));
                }
                let expect = if s == t {
                    Cyclotomic::from_rational(order_q.clone())
                } else {
                    Cyclotomic::zero()
                };
                if sum != expect {
                    return Err(Error::Verification(format!(
                        "row orthogonality fails for rows {s}, {t}"
                    )));
                }
            }
        }
        // Columns: sum over characters of chi_t(g_i) conj(chi_t(g_j)).
        for i in 0..k {
            for j in i..k {
                let mut sum = Cyclotomic::zero();
                for row in &self.values {
                    sum = sum.add(&row[i].mul(&row[j].conj()));
                }
                let expect = if i == j {
                    Cyclotomic::from_rational(BigRational::new(
                        BigInt::from(self.order),
                        BigInt::from(self.class_sizes[i]),
                    ))
                } else {
                    Cyclotomic::zero()
                };
                if sum != expect {
                    return Err(Error::Verification(format!(
                        "column orthogonality fails for classes {i}, {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn character_table(group: &PermGroup, budget: u128) -> Result<CharTable> {
    CharTable::build(group, budget)
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128 + 2;
    while x.checked_mul(x).map_or(true, |sq| sq > n) {
        x -= 1;
    }
    x
}

fn build_from_classes(cd: &ClassData) -> Result<CharTable> {
    let group = cd.group();
    let order = group.order();
    let k = cd.n_classes();
    let class_reps: Vec<Permutation> = cd
        .classes()
        .iter()
        .map(|c| c.representative.clone())
        .collect();
    let class_sizes: Vec<u64> = cd.classes().iter().map(|c| c.size).collect();
    let element_orders: Vec<u64> = cd.classes().iter().map(|c| c.element_order).collect();
    let mut power_rows: Vec<Vec<u32>> = Vec::with_capacity(k);
    for rep in &class_reps {
        let o = rep.order() as usize;
        let mut row = Vec::with_capacity(o);
        let mut acc = group.identity();
        for _ in 0..o {
            row.push(cd.class_of_perm(&acc)? as u32);
            acc = acc.compose(rep);
        }
        power_rows.push(row);
    }
    let exponent = element_orders
        .iter()
        .fold(1u64, |a, &b| num_integer::lcm(a, b));

    // Prime choice: p = 1 mod exponent, above twice the square root of the
    // order, not dividing the order.
    let bound = u64::try_from(2 * isqrt(order) + 1)
        .map_err(|_| Error::Internal("group order out of range for prime choice".into()))?;
    let mut p = exponent + 1;
    while p <= bound || !is_prime(p) || order % p as u128 == 0 {
        p += exponent;
    }

    let sizes_mod: Vec<u64> = class_sizes.iter().map(|&s| s % p).collect();
    let inv_sizes_mod: Vec<u64> = sizes_mod.iter().map(|&s| invmod(s, p)).collect();
    let order_mod = (order % p as u128) as u64;

    // Simultaneous eigenspace splitting of the class matrices.
    let mut blocks: Vec<Block> = vec![Block::full(k)];
    let mut class_order: Vec<usize> = (1..k).collect();
    class_order.sort_by_key(|&i| (class_sizes[i], i));
    for &i in &class_order {
        if blocks.iter().all(|b| b.basis.len() == 1) {
            break;
        }
        let a = class_matrix(cd, i, k, p)?;
        let mut next: Vec<Block> = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.basis.len() == 1 {
                next.push(block);
                continue;
            }
            split_block(&a, block, p, &mut next)?;
        }
        blocks = next;
    }
    if blocks.iter().any(|b| b.basis.len() != 1) {
        return Err(Error::Internal(
            "class matrices failed to separate all characters".into(),
        ));
    }

    // Eigenvalue vectors, normalized so the identity coordinate is 1.
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(k);
    for block in &blocks {
        let v = &block.basis[0];
        if v[0] == 0 {
            return Err(Error::Internal(
                "character eigenvector vanishes at the identity class".into(),
            ));
        }
        let inv = invmod(v[0], p);
        omegas.push(v.iter().map(|&x| mulmod(x, inv, p)).collect());
    }

    // Inverse classes via the power map.
    let inverse_class: Vec<usize> = (0..k)
        .map(|j| {
            let o = element_orders[j] as usize;
            power_rows[j][(o - 1) % o] as usize
        })
        .collect();

    let z = primitive_root(p);
    let xi = powmod(z, (p - 1) / exponent, p);

    let mut rows: Vec<Vec<Cyclotomic>> = Vec::with_capacity(k);
    for omega in &omegas {
        // Degree from the second orthogonality of eigenvalue data:
        // d^2 = |G| / sum_j omega_j omega_{j^-1} / |C_j|.
        let mut s = 0u64;
        for j in 0..k {
            let term = mulmod(
                mulmod(omega[j], omega[inverse_class[j]], p),
                inv_sizes_mod[j],
                p,
            );
            s = addmod(s, term, p);
        }
        if s == 0 {
            return Err(Error::Internal("degree denominator vanished mod p".into()));
        }
        let d_sq = mulmod(order_mod, invmod(s, p), p);
        let d = (1..=(p - 1) / 2)
            .find(|&d| mulmod(d, d, p) == d_sq)
            .ok_or_else(|| Error::Internal("no degree square root below p/2".into()))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|j| mulmod(d, mulmod(omega[j], inv_sizes_mod[j], p), p))
            .collect();
        // Fourier inversion along each power row lifts the class value.
        let mut row: Vec<Cyclotomic> = Vec::with_capacity(k);
        for j in 0..k {
            let o = element_orders[j];
            let omega_o = powmod(xi, exponent / o, p);
            let mut pw = Vec::with_capacity(o as usize);
            let mut acc = 1u64;
            for _ in 0..o {
                pw.push(acc);
                acc = mulmod(acc, omega_o, p);
            }
            let inv_o = invmod(o % p, p);
            let mut terms: Vec<(u64, BigRational)> = Vec::new();
            for c in 0..o {
                let mut m = 0u64;
                for (l, &cls) in power_rows[j].iter().enumerate() {
                    let idx = ((o - (c * l as u64) % o) % o) as usize;
                    m = addmod(m, mulmod(chi_mod[cls as usize], pw[idx], p), p);
                }
                m = mulmod(m, inv_o, p);
                if m != 0 {
                    terms.push((c, BigRational::from_integer(BigInt::from(m))));
                }
            }
            row.push(Cyclotomic::root_combination(o as u32, &terms)?);
        }
        rows.push(row);
    }
    // Degree ascending; within a degree, descending value vectors, which puts
    // the trivial character ahead of the other linear ones.
    rows.sort_by(|x, y| x[0].cmp(&y[0]).then_with(|| y.cmp(x)));

    let table = CharTable {
        degree: group.degree(),
        order,
        exponent,
        class_reps,
        class_sizes,
        element_orders,
        power_rows,
        values: rows,
    };
    table.verify()?;
    Ok(table)
}

/// Class matrix for class i: entry (j, l) counts products x y = z_l with
/// x in class i, y in class j, for the fixed representative z_l; stored mod p.
fn class_matrix(cd: &ClassData, i: usize, k: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    let mut a = vec![vec![0u64; k]; k];
    let reps: Vec<Permutation> = cd
        .classes()
        .iter()
        .map(|c| c.representative.clone())
        .collect();
    for r in cd.members_of(i) {
        let x = cd.index().perm_at(r);
        let x_inv = x.inverse();
        for (l, z) in reps.iter().enumerate() {
            let y = x_inv.compose(z);
            let j = cd.class_of_perm(&y)?;
            a[j][l] = addmod(a[j][l], 1, p);
        }
    }
    Ok(a)
}

struct Block {
    /// Reduced echelon basis rows spanning an invariant subspace.
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Block {
    fn full(k: usize) -> Block {
        let basis = (0..k)
            .map(|i| {
                let mut v = vec![0u64; k];
                v[i] = 1;
                v
            })
            .collect();
        Block {
            basis,
            pivots: (0..k).collect(),
        }
    }
}

/// Splits one invariant block along the eigenspaces of the class matrix `a`.
fn split_block(a: &[Vec<u64>], block: Block, p: u64, out: &mut Vec<Block>) -> Result<()> {
    let d = block.basis.len();
    let k = block.basis[0].len();
    // Image of each basis vector, and its coordinates over the basis. The
    // basis is reduced echelon, so coordinates can be read off at the pivots,
    // and the expansion check below confirms invariance.
    let mut coords: Vec<Vec<u64>> = Vec::with_capacity(d);
    for v in &block.basis {
        let mut image = vec![0u64; k];
        for (j, row) in a.iter().enumerate() {
            let mut acc = 0u64;
            for (l, &x) in v.iter().enumerate() {
                if row[l] != 0 && x != 0 {
                    acc = addmod(acc, mulmod(row[l], x, p), p);
                }
            }
            image[j] = acc;
        }
        let c: Vec<u64> = block.pivots.iter().map(|&pc| image[pc]).collect();
        let mut check = vec![0u64; k];
        for (s, &cs) in c.iter().enumerate() {
            if cs != 0 {
                for (l, &b) in block.basis[s].iter().enumerate() {
                    check[l] = addmod(check[l], mulmod(cs, b, p), p);
                }
            }
        }
        if check != image {
            return Err(Error::Internal("block is not invariant".into()));
        }
        coords.push(c);
    }
    // Restricted operator in block coordinates: column r is the coordinate
    // vector of the image of basis vector r.
    let mut restricted = vec![vec![0u64; d]; d];
    for (r, c) in coords.iter().enumerate() {
        for (s, &cs) in c.iter().enumerate() {
            restricted[s][r] = cs;
        }
    }
    let poly = charpoly_mod(restricted.clone(), p);
    let mut split_total = 0usize;
    for lambda in 0..p {
        if eval_poly_mod(&poly, lambda, p) != 0 {
            continue;
        }
        let mut shifted = restricted.clone();
        for i in 0..d {
            shifted[i][i] = submod(shifted[i][i], lambda, p);
        }
        let kernel = nullspace_mod(&shifted, p);
        if kernel.is_empty() {
            return Err(Error::Internal("eigenvalue with empty eigenspace".into()));
        }
        split_total += kernel.len();
        // Map kernel vectors from block coordinates back to length-k vectors.
        let lifted: Vec<Vec<u64>> = kernel
            .iter()
            .map(|x| {
                let mut u = vec![0u64; k];
                for (s, &xs) in x.iter().enumerate() {
                    if xs != 0 {
                        for (l, &b) in block.basis[s].iter().enumerate() {
                            u[l] = addmod(u[l], mulmod(xs, b, p), p);
                        }
                    }
                }
                u
            })
            .collect();
        let (basis, pivots) = echelonize_mod(lifted, p);
        if basis.is_empty() {
            return Err(Error::Internal("eigenspace collapsed under echelon".into()));
        }
        out.push(Block { basis, pivots });
    }
    if split_total != d {
        return Err(Error::Internal(format!(
            "eigenspaces cover {split_total} of {d} dimensions"
        )));
    }
    Ok(())
}

/// Characteristic polynomial mod p via Hessenberg reduction, monic and in
/// ascending coefficient order. No divisions besides nonzero subdiagonal
/// pivots, so it is valid for matrices larger than p.
fn charpoly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for c in 0..n.saturating_sub(2) {
        let Some(piv) = (c + 1..n).find(|&r| h[r][c] != 0) else {
            continue;
        };
        if piv != c + 1 {
            h.swap(piv, c + 1);
            for row in h.iter_mut() {
                row.swap(piv, c + 1);
            }
        }
        let inv = invmod(h[c + 1][c], p);
        for r in c + 2..n {
            let f = mulmod(h[r][c], inv, p);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let sub = mulmod(f, h[c + 1][j], p);
                h[r][j] = submod(h[r][j], sub, p);
            }
            for i in 0..n {
                let add = mulmod(f, h[i][r], p);
                h[i][c + 1] = addmod(h[i][c + 1], add, p);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for i in 1..=n {
        let mut poly = vec![0u64; i + 1];
        // (x - h[i-1][i-1]) * previous
        for (t, &c) in polys[i - 1].iter().enumerate() {
            poly[t + 1] = addmod(poly[t + 1], c, p);
            poly[t] = submod(poly[t], mulmod(h[i - 1][i - 1], c, p), p);
        }
        let mut prod = 1u64;
        for j in 2..=i {
            prod = mulmod(prod, h[i - j + 1][i - j], p);
            let coef = mulmod(h[i - j][i - 1], prod, p);
            if coef != 0 {
                for (t, &c) in polys[i - j].iter().enumerate() {
                    poly[t] = submod(poly[t], mulmod(coef, c, p), p);
                }
            }
        }
        polys.push(poly);
    }
    polys.pop().unwrap()
}

fn eval_poly_mod(poly: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in poly.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

fn nullspace_mod(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut a = m.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..d {
        let Some(r) = (row..d).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = invmod(a[row][col], p);
        for j in 0..d {
            a[row][j] = mulmod(a[row][j], inv, p);
        }
        for r2 in 0..d {
            if r2 != row && a[r2][col] != 0 {
                let f = a[r2][col];
                for j in 0..d {
                    a[r2][j] = submod(a[r2][j], mulmod(f, a[row][j], p), p);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let mut out = Vec::new();
    for fc in 0..d {
        if pivot_cols.contains(&fc) {
            continue;
        }
        let mut v = vec![0u64; d];
        v[fc] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = submod(0, a[r][fc], p);
        }
        out.push(v);
    }
    out
}

/// Reduced echelon form of a set of independent rows.
fn echelonize_mod(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let Some(r) = (row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(row, r);
        let inv = invmod(rows[row][col], p);
        for j in 0..n {
            rows[row][j] = mulmod(rows[row][j], inv, p);
        }
        for r2 in 0..rows.len() {
            if r2 != row && rows[r2][col] != 0 {
                let f = rows[r2][col];
                for j in 0..n {
                    rows[r2][j] = submod(rows[r2][j], mulmod(f, rows[row][j], p), p);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    (rows, pivots)
}

/// Maps each class of a subgroup's table to the class of the overgroup that
/// absorbs it. `g_group` must be the group `g` was computed from; it drives
/// the conjugation search when cycle type and element order do not already
/// pin the target class down.
pub fn class_fusion(h: &CharTable, g: &CharTable, g_group: &PermGroup) -> Result<Vec<usize>> {
    if h.degree != g.degree {
        return Err(Error::TableMismatch(format!(
            "permutation degrees {} and {} differ",
            h.degree, g.degree
        )));
    }
    if g.order != g_group.order() {
        return Err(Error::TableMismatch(
            "overgroup does not match its table".into(),
        ));
    }
    let g_types: Vec<(u64, Vec<u16>)> = g
        .class_reps
        .iter()
        .zip(&g.element_orders)
        .map(|(rep, &o)| (o, rep.cycle_type()))
        .collect();
    let mut fusion = Vec::with_capacity(h.n_classes());
    for (j, rep) in h.class_reps.iter().enumerate() {
        let ty = (h.element_orders[j], rep.cycle_type());
        let candidates: Vec<usize> = (0..g.n_classes()).filter(|&c| g_types[c] == ty).collect();
        match candidates.len() {
            0 => {
                return Err(Error::NotASubgroup(format!(
                    "class {j} of the subgroup has no matching class above"
                )))
            }
            1 => fusion.push(candidates[0]),
            _ => fusion.push(fuse_by_orbit(rep, &candidates, g, g_group)?),
        }
    }
    Ok(fusion)
}

/// Walks the overgroup conjugation orbit of `rep` until it meets one of the
/// candidate class representatives.
fn fuse_by_orbit(
    rep: &Permutation,
    candidates: &[usize],
    g: &CharTable,
    g_group: &PermGroup,
) -> Result<usize> {
    use std::collections::HashSet;
    for &c in candidates {
        if g.class_reps[c] == *rep {
            return Ok(c);
        }
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut stack = vec![rep.clone()];
    seen.insert(rep.clone());
    while let Some(x) = stack.pop() {
        for s in g_group.generators() {
            let y = x.conjugate_by(s);
            if seen.contains(&y) {
                continue;
            }
            for &c in candidates {
                if g.class_reps[c] == y {
                    return Ok(c);
                }
            }
            seen.insert(y.clone());
            stack.push(y);
        }
    }
    Err(Error::NotASubgroup(
        "subgroup class fuses into no class of the overgroup".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::DEFAULT_BUDGET;
    use crate::perm::Point;

    fn cyc(degree: usize, cycles: &[&[Point]]) -> Permutation {
        let v: Vec<Vec<Point>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &v).unwrap()
    }

    fn table_of(g: &PermGroup) -> CharTable {
        CharTable::build(g, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn sym3_table() {
        let t = table_of(&PermGroup::symmetric(3));
        assert_eq!(t.n_classes(), 3);
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        assert!(t.is_rational());
        // The 2-dimensional character takes values (2, 0, -1) on classes
        // (identity, transpositions, 3-cycles).
        let two = &t.values[2];
        assert_eq!(two[0], Cyclotomic::from_integer(2));
        assert_eq!(two[1], Cyclotomic::from_integer(0));
        assert_eq!(two[2], Cyclotomic::from_integer(-1));
        // Indicator of the 2-dimensional character: (4*2 + 2*(-1)) / 6 = 1.
        assert_eq!(t.frobenius_schur_indicator(2).unwrap(), 1);
    }

    #[test]
    fn sym4_and_sym5_degrees() {
        let t4 = table_of(&PermGroup::symmetric(4));
        assert_eq!(t4.degrees(), vec![1, 1, 2, 3, 3]);
        assert!(t4.is_rational());
        let t5 = table_of(&PermGroup::symmetric(5));
        assert_eq!(t5.degrees(), vec![1, 1, 4, 4, 5, 5, 6]);
        assert!(t5.is_rational());
    }

    #[test]
    fn cyclic3_has_cyclotomic_values() {
        let c3 = PermGroup::cyclic(cyc(3, &[&[0, 1, 2]]));
        let t = table_of(&c3);
        assert_eq!(t.degrees(), vec![1, 1, 1]);
        assert!(!t.is_rational());
        let irrational_rows: Vec<usize> = (0..3)
            .filter(|&r| !t.values[r].iter().all(|v| v.is_rational()))
            .collect();
        assert_eq!(irrational_rows.len(), 2);
        for r in irrational_rows {
            assert_eq!(t.frobenius_schur_indicator(r).unwrap(), 0);
        }
        assert_eq!(t.frobenius_schur_indicator(t.trivial_row()).unwrap(), 1);
    }

    #[test]
    fn quaternion_group_has_a_symplectic_character() {
        // Right regular representation of the unit quaternions: points are
        // 1, -1, i, -i, j, -j, k, -k.
        let mul_i = Permutation::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap();
        let mul_j = Permutation::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap();
        let q8 = PermGroup::from_generators(8, vec![mul_i, mul_j]).unwrap();
        assert_eq!(q8.order(), 8);
        let t = table_of(&q8);
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        assert!(t.is_rational());
        let indicators: Vec<i8> = (0..5)
            .map(|r| t.frobenius_schur_indicator(r).unwrap())
            .collect();
        assert_eq!(indicators, vec![1, 1, 1, 1, -1]);
    }

    #[test]
    fn tiny_groups() {
        let t1 = table_of(&PermGroup::trivial(2));
        assert_eq!(t1.degrees(), vec![1]);
        let t2 = table_of(&PermGroup::symmetric(2));
        assert_eq!(t2.degrees(), vec![1, 1]);
        assert_eq!(t2.trivial_row(), 0);
        assert_eq!(t2.values[1][1], Cyclotomic::from_integer(-1));
    }

    #[test]
    fn fusion_of_sym3_into_sym4() {
        let s4 = PermGroup::symmetric(4);
        let h =
            PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1]])]).unwrap();
        let th = table_of(&h);
        let tg = table_of(&s4);
        let fusion = class_fusion(&th, &tg, &s4).unwrap();
        // Identity, transpositions, 3-cycles land in classes 0, 2, 3 of the
        // canonical order (identity, double transpositions, transpositions,
        // 3-cycles, 4-cycles).
        assert_eq!(fusion, vec![0, 2, 3]);
    }

    #[test]
    fn fusion_resolves_ambiguous_cycle_types() {
        // In the dihedral group of order 8 on 4 points, the central rotation
        // and the two reflections through opposite edges all have cycle type
        // (2, 2) and order 2, but fall into distinct classes.
        let d8 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])])
            .unwrap();
        let td = table_of(&d8);
        let sub = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 2], &[1, 3]])]).unwrap();
        let ts = table_of(&sub);
        let fusion = class_fusion(&ts, &td, &d8).unwrap();
        assert_eq!(fusion[0], 0);
        // The central element is its own class in the overgroup.
        assert_eq!(td.class_sizes[fusion[1]], 1);
    }

    #[test]
    fn tables_are_deterministic() {
        let a = table_of(&PermGroup::symmetric(4));
        let b = table_of(&PermGroup::symmetric(4));
        assert_eq!(a.values, b.values);
        assert_eq!(a.class_reps, b.class_reps);
    }

    #[test]
    fn verify_rejects_tampering() {
        let mut t = table_of(&PermGroup::symmetric(3));
        t.values[2][1] = Cyclotomic::from_integer(1);
        assert!(t.verify().is_err());
    }
}
