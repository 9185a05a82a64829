//! Centralizer enumeration and splitness certification.
//!
//! The enumeration walks the poset of centralizers of elementary abelian
//! 2-subgroups: starting from the whole group, repeatedly centralize a
//! noncentral involution (one per conjugacy class) and keep one subgroup per
//! ambient conjugacy class. C_W(<E, x>) = C_{C_W(E)}(x) makes the iteration
//! reach every such centralizer.
//!
//! Certification is by parity: a rational irreducible whose multiplicity in
//! a character afforded by some rational representation is odd has odd Schur
//! index, and the index of a rational-valued character divides 2, so it is
//! realizable over the rationals. The rational representations used are the
//! inductions of rational Sylow-2 characters with indicator +1, then one
//! round of tensor products of already-certified characters.

use std::cmp::Reverse;
use std::time::Instant;

use num_traits::Signed;
use rayon::prelude::*;

use crate::charop::{induce, integral_multiplicities, tensor};
use crate::classes::{centralizer_of, ClassData};
use crate::cyclo::Cyclotomic;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subconj::{fingerprint, is_conjugate_subgroups, transporter_search, Fingerprint};
use crate::sylow::sylow2;
use crate::table::{class_fusion, CharTable};
use crate::weyl::{coxeter_group, CoxeterType};

/// Centralizers of elementary abelian 2-subgroups of an ambient group, one
/// per ambient conjugacy class of subgroups. The ambient group itself is the
/// first member (the trivial subgroup's centralizer); `provenance[i]` is a
/// chain of involutions whose iterated centralizers produce member i.
#[derive(Clone, Debug)]
pub struct CentralizerSet {
    pub ambient: PermGroup,
    pub members: Vec<PermGroup>,
    pub provenance: Vec<Vec<Permutation>>,
}

pub fn centralizers_of_elem_ab_2(w: &PermGroup, budget: u128) -> Result<CentralizerSet> {
    let mut members: Vec<PermGroup> = vec![w.clone()];
    let mut provenance: Vec<Vec<Permutation>> = vec![Vec::new()];
    let mut fps: Vec<Fingerprint> = vec![fingerprint(w, budget)?];
    let mut next = 0;
    while next < members.len() {
        let x = members[next].clone();
        let chain = provenance[next].clone();
        next += 1;
        if x.is_abelian() {
            // Every involution is central, so every centralizer is x itself.
            continue;
        }
        let cd = ClassData::new(&x, budget)?;
        for cls in cd.classes() {
            if cls.element_order != 2 {
                continue;
            }
            let j = &cls.representative;
            if x.generators().iter().all(|g| j.commutes_with(g)) {
                continue;
            }
            let c = centralizer_of(&x, j)?;
            let fp = fingerprint(&c, budget)?;
            let duplicate = members
                .iter()
                .zip(&fps)
                .any(|(k, kfp)| *kfp == fp && transporter_search(w, k, &c).is_some());
            if !duplicate {
                members.push(c);
                fps.push(fp);
                let mut p = chain.clone();
                p.push(j.clone());
                provenance.push(p);
            }
        }
    }
    // Canonical order: descending order, then class count, then fingerprint.
    let mut idx: Vec<usize> = (0..members.len()).collect();
    idx.sort_by_key(|&i| {
        (
            Reverse(members[i].order()),
            fps[i].class_count(),
            fps[i].clone(),
        )
    });
    Ok(CentralizerSet {
        ambient: w.clone(),
        members: idx.iter().map(|&i| members[i].clone()).collect(),
        provenance: idx.iter().map(|&i| provenance[i].clone()).collect(),
    })
}

/// Oracle for the enumeration: materialize every elementary abelian
/// 2-subgroup of `w` by breadth-first extension with commuting involutions,
/// centralize each, and reduce the centralizers by ambient conjugacy. Only
/// viable for small groups.
pub fn brute_force_centralizer_classes(w: &PermGroup, budget: u128) -> Result<Vec<PermGroup>> {
    let mut involutions = Vec::new();
    for g in w.elements() {
        if g.order() == 2 {
            involutions.push(g);
        }
    }
    // Element sets of the subgroups found so far, as sorted image vectors.
    let mut seen: std::collections::BTreeSet<Vec<Vec<u16>>> = std::collections::BTreeSet::new();
    let identity = Permutation::identity(w.degree());
    let mut frontier: Vec<Vec<Permutation>> = vec![vec![identity]];
    seen.insert(canonical_element_set(&frontier[0]));
    let mut all_subgroups: Vec<Vec<Permutation>> = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for elements in &frontier {
            for t in &involutions {
                if elements.contains(t) {
                    continue;
                }
                if !elements.iter().all(|e| e.commutes_with(t)) {
                    continue;
                }
                let mut bigger = elements.clone();
                for e in elements {
                    bigger.push(e.compose(t));
                }
                let key = canonical_element_set(&bigger);
                if seen.insert(key) {
                    next.push(bigger.clone());
                    all_subgroups.push(bigger);
                }
            }
        }
        frontier = next;
    }
    let mut reps: Vec<PermGroup> = Vec::new();
    for elements in &all_subgroups {
        let sub = PermGroup::from_generators(w.degree(), elements.clone())?;
        let mut cent = w.clone();
        for h in sub.generators() {
            if h.is_identity() {
                continue;
            }
            cent = centralizer_of(&cent, h)?;
        }
        let mut fresh = true;
        for r in &reps {
            if is_conjugate_subgroups(w, r, &cent, budget)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(cent);
        }
    }
    reps.sort_by_key(|g| Reverse(g.order()));
    Ok(reps)
}

fn canonical_element_set(elements: &[Permutation]) -> Vec<Vec<u16>> {
    let mut v: Vec<Vec<u16>> = elements.iter().map(|p| p.images().to_vec()).collect();
    v.sort_unstable();
    v
}

/// How one irreducible character was certified as realizable over Q, or why
/// it was not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharCertificate {
    /// Odd multiplicity in the induction of the given Sylow-2 table row.
    Induced {
        sylow_row: usize,
        multiplicity: i64,
    },
    /// Odd multiplicity in the tensor product of two certified rows.
    Tensor {
        rows: (usize, usize),
        multiplicity: i64,
    },
    /// Row of a 2-group table with rational values and indicator +1.
    TwoGroupRational,
    Uncertified {
        reason: UncertifiedReason,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UncertifiedReason {
    /// First class index carrying an irrational value.
    Irrational { class_index: usize },
    /// Rational 2-group character with indicator -1.
    IndicatorNotPositive,
    /// Rational, but no inducing or tensor character had odd multiplicity.
    ParityNotFound,
}

impl std::fmt::Display for UncertifiedReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UncertifiedReason::Irrational { class_index } => {
                write!(f, "irrational value at class {class_index}")
            }
            UncertifiedReason::IndicatorNotPositive => {
                write!(f, "rational with indicator -1")
            }
            UncertifiedReason::ParityNotFound => {
                write!(f, "no odd-multiplicity witness found")
            }
        }
    }
}

impl CharCertificate {
    pub fn is_certified(&self) -> bool {
        !matches!(self, CharCertificate::Uncertified { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Timings {
    pub table_ms: u128,
    pub sylow_ms: u128,
    pub total_ms: u128,
}

/// Outcome of the parity certification for one group.
#[derive(Clone, Debug)]
pub struct SplitReport {
    pub label: String,
    pub order: u128,
    pub n_classes: usize,
    pub degrees: Vec<u64>,
    /// All irreducible character values rational.
    pub b1: bool,
    /// The Sylow-2 subgroup's table is rational with all indicators +1.
    pub b2: bool,
    /// Everything certified by the induction stage alone.
    pub b3: bool,
    /// Everything certified after one round of tensor products.
    pub b4: bool,
    /// One certificate per table row.
    pub certificates: Vec<CharCertificate>,
    pub timings: Timings,
}

impl SplitReport {
    pub fn fully_certified(&self) -> bool {
        self.b4
    }
}

fn first_irrational_class(row: &[Cyclotomic]) -> Option<usize> {
    row.iter().position(|v| !v.is_rational())
}

pub fn certify_split(x: &PermGroup, label: &str, budget: u128) -> Result<SplitReport> {
    let started = Instant::now();
    let table_start = Instant::now();
    let table = CharTable::build(x, budget)?;
    let mut timings = Timings {
        table_ms: table_start.elapsed().as_millis(),
        ..Timings::default()
    };
    let report = if x.order().is_power_of_two() {
        certify_two_group(x, label, &table, timings.clone())?
    } else {
        certify_general(x, label, &table, budget, &mut timings)?
    };
    let mut report = report;
    report.timings.total_ms = started.elapsed().as_millis();
    Ok(report)
}

/// For a 2-group, a rational row with indicator +1 has Schur index 1, and
/// those are the only split rows, so the report needs no induction stage:
/// the group is its own Sylow-2 subgroup.
fn certify_two_group(
    x: &PermGroup,
    label: &str,
    table: &CharTable,
    timings: Timings,
) -> Result<SplitReport> {
    let mut certificates = Vec::with_capacity(table.values.len());
    for (t, row) in table.values.iter().enumerate() {
        if let Some(class_index) = first_irrational_class(row) {
            certificates.push(CharCertificate::Uncertified {
                reason: UncertifiedReason::Irrational { class_index },
            });
        } else if table.frobenius_schur_indicator(t)? == 1 {
            certificates.push(CharCertificate::TwoGroupRational);
        } else {
            certificates.push(CharCertificate::Uncertified {
                reason: UncertifiedReason::IndicatorNotPositive,
            });
        }
    }
    let b1 = table.is_rational();
    let all = certificates.iter().all(|c| c.is_certified());
    Ok(SplitReport {
        label: label.to_string(),
        order: x.order(),
        n_classes: table.n_classes(),
        degrees: table.degrees(),
        b1,
        b2: all,
        b3: all,
        b4: all,
        certificates,
        timings,
    })
}

fn certify_general(
    x: &PermGroup,
    label: &str,
    table: &CharTable,
    budget: u128,
    timings: &mut Timings,
) -> Result<SplitReport> {
    let sylow_start = Instant::now();
    let syl = sylow2(x)?;
    let syl_table = CharTable::build(&syl, budget)?;
    timings.sylow_ms = sylow_start.elapsed().as_millis();

    let b1 = table.is_rational();
    let mut inducible: Vec<usize> = Vec::new();
    for (t, row) in syl_table.values.iter().enumerate() {
        if row.iter().all(|v| v.is_rational()) && syl_table.frobenius_schur_indicator(t)? == 1 {
            inducible.push(t);
        }
    }
    let b2 = inducible.len() == syl_table.values.len();

    let fusion = class_fusion(&syl_table, table, x)?;
    let mut certificates: Vec<Option<CharCertificate>> = table
        .values
        .iter()
        .map(|row| {
            first_irrational_class(row).map(|class_index| CharCertificate::Uncertified {
                reason: UncertifiedReason::Irrational { class_index },
            })
        })
        .collect();

    // Induction stage: first Sylow row (in table order) with odd multiplicity.
    for &t in &inducible {
        if certificates.iter().all(|c| c.is_some()) {
            break;
        }
        let induced = induce(&syl_table, &syl_table.values[t], table, &fusion)?;
        let mults = integral_multiplicities(table, &induced)?;
        for (r, slot) in certificates.iter_mut().enumerate() {
            if slot.is_none() && mults[r].abs() % 2 == 1.into() {
                *slot = Some(CharCertificate::Induced {
                    sylow_row: t,
                    multiplicity: to_i64(&mults[r]),
                });
            }
        }
    }
    let b3 = certificates
        .iter()
        .all(|c| matches!(c, Some(c) if c.is_certified()));

    // Tensor stage over the snapshot of rows certified so far.
    if !b3 {
        let certified_rows: Vec<usize> = certificates
            .iter()
            .enumerate()
            .filter_map(|(r, c)| match c {
                Some(c) if c.is_certified() => Some(r),
                _ => None,
            })
            .collect();
        'outer: for (i, &a) in certified_rows.iter().enumerate() {
            for &b in &certified_rows[i..] {
                if certificates.iter().all(|c| c.is_some()) {
                    break 'outer;
                }
                let prod = tensor(&table.values[a], &table.values[b])?;
                let mults = integral_multiplicities(table, &prod)?;
                for (r, slot) in certificates.iter_mut().enumerate() {
                    if slot.is_none() && mults[r].abs() % 2 == 1.into() {
                        *slot = Some(CharCertificate::Tensor {
                            rows: (a, b),
                            multiplicity: to_i64(&mults[r]),
                        });
                    }
                }
            }
        }
    }

    let certificates: Vec<CharCertificate> = certificates
        .into_iter()
        .map(|c| {
            c.unwrap_or(CharCertificate::Uncertified {
                reason: UncertifiedReason::ParityNotFound,
            })
        })
        .collect();
    let b4 = certificates.iter().all(|c| c.is_certified());
    Ok(SplitReport {
        label: label.to_string(),
        order: x.order(),
        n_classes: table.n_classes(),
        degrees: table.degrees(),
        b1,
        b2,
        b3,
        b4,
        certificates,
        timings: timings.clone(),
    })
}

fn to_i64(n: &num_bigint::BigInt) -> i64 {
    i64::try_from(n.clone()).expect("certificate multiplicity fits i64")
}

/// One enumerated centralizer together with its certification outcome (or
/// the error that stopped it).
#[derive(Clone, Debug)]
pub struct SuiteMember {
    pub order: u128,
    pub provenance_len: usize,
    pub outcome: Result<SplitReport>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub label: String,
    pub ambient_order: u128,
    pub member_orders: Vec<u128>,
    pub members: Vec<SuiteMember>,
}

impl SuiteReport {
    pub fn fully_certified(&self) -> bool {
        self.members
            .iter()
            .all(|m| matches!(&m.outcome, Ok(r) if r.fully_certified()))
    }
}

/// Enumerate the centralizers of elementary abelian 2-subgroups of the
/// reflection group of `t` and certify each member. Member failures are
/// recorded, not propagated, so one oversized member does not sink the suite.
pub fn run_suite(t: &CoxeterType, budget: u128) -> Result<SuiteReport> {
    let w = coxeter_group(t)?;
    run_suite_on(&w, &t.to_string(), budget)
}

pub fn run_suite_on(w: &PermGroup, label: &str, budget: u128) -> Result<SuiteReport> {
    let set = centralizers_of_elem_ab_2(w, budget)?;
    let members: Vec<SuiteMember> = set
        .members
        .par_iter()
        .zip(set.provenance.par_iter())
        .enumerate()
        .map(|(i, (m, prov))| SuiteMember {
            order: m.order(),
            provenance_len: prov.len(),
            outcome: certify_split(m, &format!("{label}#{i}"), budget),
        })
        .collect();
    Ok(SuiteReport {
        label: label.to_string(),
        ambient_order: w.order(),
        member_orders: set.members.iter().map(|m| m.order()).collect(),
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{centralizer_of_subgroup, DEFAULT_BUDGET};
    use crate::perm::Point;
    use crate::weyl::signed_permutation_group;

    fn cyc(degree: usize, cycles: &[&[Point]]) -> Permutation {
        let v: Vec<Vec<Point>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &v).unwrap()
    }

    #[test]
    fn sym4_centralizer_classes() {
        let w = PermGroup::symmetric(4);
        let set = centralizers_of_elem_ab_2(&w, DEFAULT_BUDGET).unwrap();
        let orders: Vec<u128> = set.members.iter().map(|m| m.order()).collect();
        assert_eq!(orders, vec![24, 8, 4, 4]);
        assert!(set.provenance[0].is_empty());
        for (m, prov) in set.members.iter().zip(&set.provenance).skip(1) {
            // Replaying the involution chain reproduces the member.
            let mut c = w.clone();
            for t in prov {
                c = centralizer_of(&c, t).unwrap();
            }
            assert!(c.same_element_set(m));
        }
        // Pairwise non-conjugacy, certified by the public checker.
        for i in 0..set.members.len() {
            for j in i + 1..set.members.len() {
                assert!(is_conjugate_subgroups(
                    &w,
                    &set.members[i],
                    &set.members[j],
                    DEFAULT_BUDGET
                )
                .unwrap()
                .is_none());
            }
        }
    }

    #[test]
    fn abelian_ambient_is_its_own_set() {
        let klein = PermGroup::from_generators(
            4,
            vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        let set = centralizers_of_elem_ab_2(&klein, DEFAULT_BUDGET).unwrap();
        assert_eq!(set.members.len(), 1);
        assert_eq!(set.members[0].order(), 4);
    }

    #[test]
    fn enumeration_matches_brute_force_on_small_groups() {
        for w in [
            PermGroup::symmetric(4),
            PermGroup::symmetric(5),
            signed_permutation_group(2),
            signed_permutation_group(3),
        ] {
            let fast = centralizers_of_elem_ab_2(&w, DEFAULT_BUDGET).unwrap();
            let slow = brute_force_centralizer_classes(&w, DEFAULT_BUDGET).unwrap();
            let fast_orders: Vec<u128> = fast.members.iter().map(|m| m.order()).collect();
            let slow_orders: Vec<u128> = slow.iter().map(|m| m.order()).collect();
            assert_eq!(fast_orders, slow_orders);
            // Orders can repeat, so match members up to conjugacy.
            for m in &fast.members {
                assert!(slow
                    .iter()
                    .any(|s| is_conjugate_subgroups(&w, s, m, DEFAULT_BUDGET)
                        .unwrap()
                        .is_some()
                        || s.same_element_set(m)));
            }
        }
    }

    #[test]
    fn centralizer_iteration_identity() {
        let w = PermGroup::symmetric(6);
        let t1 = cyc(6, &[&[0, 1], &[2, 3]]);
        let t2 = cyc(6, &[&[0, 1], &[4, 5]]);
        assert!(t1.commutes_with(&t2));
        let sub = PermGroup::from_generators(6, vec![t1.clone(), t2.clone()]).unwrap();
        let joint = centralizer_of_subgroup(&w, &sub).unwrap();
        let nested = centralizer_of(&centralizer_of(&w, &t1).unwrap(), &t2).unwrap();
        assert!(joint.same_element_set(&nested));
    }

    #[test]
    fn g2_fully_certifies() {
        let w = coxeter_group(&"G2".parse().unwrap()).unwrap();
        let report = certify_split(&w, "G2", DEFAULT_BUDGET).unwrap();
        assert!(report.b1);
        assert_eq!(report.n_classes, 6);
        assert!(report.certificates.iter().all(|c| c.is_certified()));
        assert!(report.b4);
    }

    #[test]
    fn h3_is_irrational() {
        let w = coxeter_group(&"H3".parse().unwrap()).unwrap();
        let report = certify_split(&w, "H3", DEFAULT_BUDGET).unwrap();
        assert!(!report.b1);
        assert!(!report.fully_certified());
        assert!(report.certificates.iter().any(|c| matches!(
            c,
            CharCertificate::Uncertified {
                reason: UncertifiedReason::Irrational { .. }
            }
        )));
    }

    #[test]
    fn quaternion_group_report() {
        let mul_i = Permutation::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap();
        let mul_j = Permutation::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap();
        let q8 = PermGroup::from_generators(8, vec![mul_i, mul_j]).unwrap();
        let report = certify_split(&q8, "Q8", DEFAULT_BUDGET).unwrap();
        assert!(report.b1);
        assert!(!report.b2);
        assert!(!report.fully_certified());
        let certified = report
            .certificates
            .iter()
            .filter(|c| c.is_certified())
            .count();
        assert_eq!(certified, 4);
        assert!(report.certificates.contains(&CharCertificate::Uncertified {
            reason: UncertifiedReason::IndicatorNotPositive,
        }));
    }

    #[test]
    fn dihedral8_two_group_certifies() {
        let d8 = PermGroup::from_generators(4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])])
            .unwrap();
        let report = certify_split(&d8, "D8", DEFAULT_BUDGET).unwrap();
        assert!(report.b1 && report.b2 && report.b3 && report.b4);
        assert!(report
            .certificates
            .iter()
            .all(|c| *c == CharCertificate::TwoGroupRational));
    }

    #[test]
    fn product_splits_iff_factors_do() {
        let b2 = coxeter_group(&"B2".parse().unwrap()).unwrap();
        let a1 = coxeter_group(&"A1".parse().unwrap()).unwrap();
        let both = b2.direct_product(&a1);
        let report = certify_split(&both, "B2xA1", DEFAULT_BUDGET).unwrap();
        assert!(report.fully_certified());

        // A quaternion factor poisons the product.
        let mul_i = Permutation::from_images(vec![2, 3, 1, 0, 7, 6, 4, 5]).unwrap();
        let mul_j = Permutation::from_images(vec![4, 5, 6, 7, 1, 0, 3, 2]).unwrap();
        let q8 = PermGroup::from_generators(8, vec![mul_i, mul_j]).unwrap();
        let poisoned = q8.direct_product(&a1);
        let report = certify_split(&poisoned, "Q8xA1", DEFAULT_BUDGET).unwrap();
        assert!(!report.fully_certified());
    }

    #[test]
    fn certificates_reverify() {
        let w = coxeter_group(&"B3".parse().unwrap()).unwrap();
        let report = certify_split(&w, "B3", DEFAULT_BUDGET).unwrap();
        assert!(report.fully_certified());
        let table = CharTable::build(&w, DEFAULT_BUDGET).unwrap();
        let syl = sylow2(&w).unwrap();
        let syl_table = CharTable::build(&syl, DEFAULT_BUDGET).unwrap();
        let fusion = class_fusion(&syl_table, &table, &w).unwrap();
        for (r, cert) in report.certificates.iter().enumerate() {
            match cert {
                CharCertificate::Induced {
                    sylow_row,
                    multiplicity,
                } => {
                    let ind =
                        induce(&syl_table, &syl_table.values[*sylow_row], &table, &fusion).unwrap();
                    let m = integral_multiplicities(&table, &ind).unwrap();
                    assert_eq!(m[r], (*multiplicity).into());
                    assert_eq!(multiplicity.rem_euclid(2), 1);
                }
                CharCertificate::Tensor { rows, multiplicity } => {
                    let prod = tensor(&table.values[rows.0], &table.values[rows.1]).unwrap();
                    let m = integral_multiplicities(&table, &prod).unwrap();
                    assert_eq!(m[r], (*multiplicity).into());
                    assert_eq!(multiplicity.rem_euclid(2), 1);
                }
                _ => {}
            }
        }
    }

    #[test]
    fn g2_suite_is_fully_certified_and_deterministic() {
        let suite = run_suite(&"G2".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(suite.ambient_order, 12);
        assert!(suite.fully_certified());
        let again = run_suite(&"G2".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(suite.member_orders, again.member_orders);
        for (a, b) in suite.members.iter().zip(&again.members) {
            let (ra, rb) = (a.outcome.as_ref().unwrap(), b.outcome.as_ref().unwrap());
            assert_eq!(ra.certificates, rb.certificates);
            assert_eq!((ra.b1, ra.b2, ra.b3, ra.b4), (rb.b1, rb.b2, rb.b3, rb.b4));
        }
    }

    #[test]
    fn h3_suite_top_fails_but_proper_members_have_good_sylows() {
        let suite = run_suite(&"H3".parse().unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(suite.ambient_order, 120);
        let top = suite.members[0].outcome.as_ref().unwrap();
        assert!(!top.b1);
        for m in &suite.members {
            if m.provenance_len > 0 {
                assert!(m.outcome.as_ref().unwrap().b2, "order {}", m.order);
            }
        }
    }
}
