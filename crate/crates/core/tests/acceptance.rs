//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hullmass::census::{self, Caps};
use hullmass::code::{self, pairing, LinearCode};
use hullmass::formulas::{self, CountQuery, GroupKind};
use hullmass::matrix::{gram, skew_reduce, InnerProduct, Matrix};
use hullmass::{Elem, Field};

use InnerProduct::{Hermitian, Symplectic};

const RANDOM_CASES: usize = 500;
const ASYMPTOTIC_GAP: f64 = 1e-4;
const LIMIT_TOLERANCE: f64 = 1e-9;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn caps() -> Caps {
    Caps::default()
}

fn gf(q: u64) -> Arc<Field> {
    Field::from_order(q).unwrap()
}

fn c1_worked_example() -> Outcome {
    let m = formulas::hull_mass(&CountQuery::new(Hermitian, 2, 4, 2, 1)).unwrap();
    ensure(m.count == big(90), || format!("hull_mass = {}", m.count))?;
    let r = census::hull_census(Hermitian, 2, 4, 2, &caps()).unwrap();
    let counts: Vec<u64> = r.rows.iter().map(|r| r.enumerated).collect();
    ensure(counts == [240, 90, 27], || format!("census {counts:?}"))?;
    ensure(r.total == 357, || format!("total {}", r.total))?;
    ensure(r.all_match(), || "formula mismatch".into())?;
    let lcd = formulas::hermitian_lcd_count(2, 4, 2);
    let so = formulas::hermitian_self_orthogonal_count(2, 4, 2);
    ensure(lcd == big(240) && so == big(27), || {
        format!("lcd {lcd}, so {so}")
    })?;
    Ok("census {0: 240, 1: 90, 2: 27} of 357 codes".into())
}

fn c2_classification() -> Outcome {
    let r = census::classify(Hermitian, 2, 4, 2, 1, &caps()).unwrap();
    let auts: Vec<u64> = r.classes.iter().map(|c| c.aut_order).sorted().collect();
    ensure(r.classes.len() == 7, || {
        format!("{} classes", r.classes.len())
    })?;
    ensure(auts == [1, 1, 2, 2, 3, 3, 12], || {
        format!("aut orders {auts:?}")
    })?;
    let ninety = BigRational::from_integer(BigInt::from(90));
    ensure(r.mass_lhs == ninety && r.matches(), || {
        format!("mass {}", r.mass_lhs)
    })?;
    Ok(format!("7 classes, |Aut| = {auts:?}, sum 4!/|Aut| = 90"))
}

fn c3_symplectic() -> Outcome {
    let r = census::hull_census(Symplectic, 3, 2, 2, &caps()).unwrap();
    ensure(r.count(2) == Some(40), || {
        format!("l=2 count {:?}", r.count(2))
    })?;
    ensure(r.all_match(), || "formula mismatch".into())?;
    let f = gf(3);
    let mut nonzero = 0;
    for u in (0..4)
        .map(|_| f.elements().collect::<Vec<_>>())
        .multi_cartesian_product()
    {
        if u.iter().all(|&x| x == 0) {
            continue;
        }
        nonzero += 1;
        let c = census::sso_containing_census(3, 2, 2, &u, &caps()).unwrap();
        ensure(c == 4, || format!("u = {u:?} gives {c}"))?;
    }
    let formula = formulas::sso_containing_count(3, 2, 2).unwrap();
    ensure(formula == big(4), || format!("formula {formula}"))?;
    Ok(format!(
        "40 ternary SO [4,2] codes; 4 contain each of the {nonzero} nonzero u"
    ))
}

fn c4_grid() -> Outcome {
    let mut points = 0;
    let grid: [(InnerProduct, u64, u32); 4] = [
        (Hermitian, 2, 4),
        (Hermitian, 3, 3),
        (Symplectic, 2, 3),
        (Symplectic, 3, 2),
    ];
    for (inner, q, max_n) in grid {
        for n in 1..=max_n {
            let length = CountQuery::new(inner, q, n, 0, 0).length();
            for k in 0..=length {
                let r = census::hull_census(inner, q, n, k, &caps()).unwrap();
                ensure(r.all_match(), || {
                    format!("{inner} q={q} n={n} k={k}: {:?}", r.rows)
                })?;
                let total = formulas::total_codes(&CountQuery::new(inner, q, n, k, 0));
                let sum: BigUint = r.rows.iter().map(|row| row.formula.clone()).sum();
                ensure(sum == total && big(r.total) == total, || {
                    format!("{inner} q={q} n={n} k={k}: partition {sum} vs {total}")
                })?;
                points += 1;
            }
        }
    }
    Ok(format!(
        "{points} grid points, every hull dimension matches"
    ))
}

fn c5_groups() -> Outcome {
    let cases = [
        (GroupKind::Unitary, 1, 2),
        (GroupKind::Unitary, 2, 2),
        (GroupKind::Unitary, 1, 3),
        (GroupKind::Symplectic, 1, 2),
        (GroupKind::Symplectic, 2, 2),
        (GroupKind::Symplectic, 1, 3),
    ];
    let mut seen = Vec::new();
    for (kind, n, q) in cases {
        let g = census::enumerate_group(kind, n, q, &caps()).unwrap();
        let order = formulas::group_order(kind, n, q);
        ensure(BigUint::from(g.len()) == order, || {
            format!("{kind} n={n} q={q}: {} vs {order}", g.len())
        })?;
        seen.push(g.len());
    }
    let h = census::stabilizer_check(Hermitian, 2, 2, 1, &caps()).unwrap();
    ensure(
        h.holds() && (h.orbit_size, h.stabilizer_size, h.group_order) == (2, 9, 18),
        || format!("{h:?}"),
    )?;
    let s = census::stabilizer_check(Symplectic, 2, 2, 1, &caps()).unwrap();
    ensure(
        s.holds() && (s.orbit_size, s.stabilizer_size, s.group_order) == (20, 36, 720),
        || format!("{s:?}"),
    )?;
    Ok(format!("group sizes {seen:?}; 2*9 = 18 and 20*36 = 720"))
}

fn c6_diagonal_jacobi() -> Outcome {
    for q in [2u64, 3] {
        for n in 1..=3u32 {
            let m = census::diagonal_census(q, n, &caps()).unwrap();
            ensure(m.len() == q as usize, || {
                format!("q={q}: {} subfield values", m.len())
            })?;
            for (&a, &count) in &m {
                let expect = formulas::diagonal_count(q, n, a == 0);
                ensure(big(count) == expect, || {
                    format!("q={q} n={n} a={a}: {count} vs {expect}")
                })?;
            }
        }
    }
    for n in 1..=3 {
        let j = formulas::jacobi_sum_check(2, n, formulas::DEFAULT_JACOBI_BUDGET).unwrap();
        ensure(j.holds(), || format!("n={n}: {j:?}"))?;
    }
    for q in 2..=5u64 {
        for n in 1..=8u32 {
            let z = formulas::diagonal_count(q, n, true);
            let o = formulas::diagonal_count(q, n, false);
            let zp = formulas::diagonal_count(q, n - 1, true);
            let op = formulas::diagonal_count(q, n - 1, false);
            ensure(z == &zp + big(q * q - 1) * &op, || {
                format!("N0 recurrence q={q} n={n}")
            })?;
            ensure(o == big(q + 1) * &zp + big(q * q - q - 1) * &op, || {
                format!("N1 recurrence q={q} n={n}")
            })?;
        }
    }
    Ok("brute force, character sums, and recurrences agree".into())
}

fn random_code(rng: &mut ChaCha8Rng, field: &Arc<Field>, length: usize, k: usize) -> LinearCode {
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|_| {
            (0..length)
                .map(|_| rng.random_range(0..field.order()) as Elem)
                .collect()
        })
        .collect();
    LinearCode::from_vectors(field, length, &rows).unwrap()
}

fn random_lcd(
    rng: &mut ChaCha8Rng,
    field: &Arc<Field>,
    inner: InnerProduct,
    length: usize,
    k: usize,
) -> LinearCode {
    loop {
        let c = random_code(rng, field, length, k);
        if c.dimension() == k && code::is_lcd(&c, inner).unwrap() {
            return c;
        }
    }
}

fn c7_constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let herm = [4u64, 9, 16, 25];
    let symp = [2u64, 3, 4, 5, 7, 8, 9];

    for _ in 0..RANDOM_CASES {
        let f = gf(herm[rng.random_range(0..herm.len())]);
        let n = rng.random_range(1..=6);
        let k = rng.random_range(0..=n);
        let c = random_code(&mut rng, &f, n, k);
        let g = code::hermitian_normal_form(&c).unwrap();
        let ell = code::hull_dimension(&c, Hermitian).unwrap();
        let k = c.dimension();
        ensure(LinearCode::from_rows(&g) == c, || {
            format!("normal form changes the code {c:?}")
        })?;
        let want = Matrix::partial_identity(&f, k - ell, k);
        ensure(gram(&g, Hermitian).unwrap() == want, || {
            format!("normal form Gram for {c:?}")
        })?;
    }

    for _ in 0..RANDOM_CASES {
        let f = gf(symp[rng.random_range(0..symp.len())]);
        let n = rng.random_range(1..=3);
        let k = 2 * rng.random_range(0..=n);
        let c = random_lcd(&mut rng, &f, Symplectic, 2 * n, k);
        let g = code::symplectic_basis(&c).unwrap();
        ensure(
            gram(&g, Symplectic).unwrap() == Matrix::j2_blocks(&f, k / 2, k),
            || format!("symplectic basis for {c:?}"),
        )?;
        ensure(LinearCode::from_rows(&g) == c, || {
            "symplectic basis changes the code".into()
        })?;
    }

    for inner in [Hermitian, Symplectic] {
        for _ in 0..RANDOM_CASES {
            let (f, length, k) = match inner {
                Hermitian => {
                    let n = rng.random_range(1..=5);
                    (
                        gf(herm[rng.random_range(0..herm.len())]),
                        n,
                        rng.random_range(0..=n),
                    )
                }
                Symplectic => {
                    let n = rng.random_range(1..=3);
                    (
                        gf(symp[rng.random_range(0..symp.len())]),
                        2 * n,
                        2 * rng.random_range(0..=n),
                    )
                }
            };
            let a = random_lcd(&mut rng, &f, inner, length, k);
            let b = random_lcd(&mut rng, &f, inner, length, k);
            let q = code::transporter(&a, &b, inner).unwrap();
            let form = match inner {
                Hermitian => Matrix::identity(&f, length),
                Symplectic => Matrix::omega(&f, length / 2),
            };
            ensure(gram(&q, inner).unwrap() == form, || {
                format!("{inner} transporter breaks the form")
            })?;
            ensure(a.transform(&q) == b, || {
                format!("{inner} transporter misses the target")
            })?;
        }
    }

    for _ in 0..RANDOM_CASES {
        let f = gf(symp[rng.random_range(0..symp.len())]);
        let n = rng.random_range(1..=7);
        let mut m = Matrix::zeros(&f, n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.random_range(0..f.order()) as Elem;
                m.set(i, j, v);
                m.set(j, i, f.neg(v));
            }
        }
        let (q, t) = skew_reduce(&m).unwrap();
        ensure(t % 2 == 0 && t == m.rank(), || {
            format!("rank {} but t = {t}", m.rank())
        })?;
        ensure(q.rank() == n, || "reducing matrix is singular".into())?;
        ensure(
            q.mul(&m).mul(&q.transpose()) == Matrix::j2_blocks(&f, t / 2, n),
            || "block shape".into(),
        )?;
    }

    for _ in 0..RANDOM_CASES {
        let inner = if rng.random_bool(0.5) {
            Hermitian
        } else {
            Symplectic
        };
        let (f, length) = match inner {
            Hermitian => (gf(herm[rng.random_range(0..2)]), rng.random_range(1..=5)),
            Symplectic => (
                gf(symp[rng.random_range(0..4)]),
                2 * rng.random_range(1..=3),
            ),
        };
        let k = rng.random_range(0..length);
        let c = random_code(&mut rng, &f, length, k);
        let ell = code::hull_dimension(&c, inner).unwrap();
        let ext = code::hull_extensions(&c, inner, 1 << 16).unwrap();
        for d in &ext.codes {
            ensure(code::hull_dimension(d, inner).unwrap() == ell + 1, || {
                format!("{inner} extension of {c:?}")
            })?;
        }
    }

    let mut checked = 0;
    for inner in [Hermitian, Symplectic] {
        let (f, lengths): (Arc<Field>, Vec<usize>) = match inner {
            Hermitian => (gf(4), vec![1, 2, 3]),
            Symplectic => (gf(2), vec![2, 4]),
        };
        let order = f.order() as u64;
        for &length in &lengths {
            for k in 1..=length {
                // tally (D, x) pairs by the code D ⊕ ⟨x⟩ they produce
                let mut pairs: HashMap<LinearCode, u64> = HashMap::new();
                for d in census::enumerate_codes(&f, length, k - 1, &caps()).unwrap() {
                    let dual = code::dual(&d, inner).unwrap();
                    dual.for_each_codeword(1 << 20, |x| {
                        if d.contains(x) || (inner == Hermitian && pairing(&f, inner, x, x) != 0) {
                            return;
                        }
                        *pairs.entry(d.extend(x)).or_default() += 1;
                    })
                    .unwrap();
                }
                for c in census::enumerate_codes(&f, length, k, &caps()).unwrap() {
                    let ell = code::hull_dimension(&c, inner).unwrap() as u32;
                    let expect = if ell == 0 {
                        0
                    } else {
                        (order.pow(ell) - 1) * order.pow(k as u32 - 1)
                    };
                    let got = pairs.get(&c).copied().unwrap_or(0);
                    ensure(got == expect, || {
                        format!("{inner} {c:?}: {got} pairs, expected {expect}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{RANDOM_CASES} random cases per construction; multiplicities exhaustive over {checked} codes"))
}

fn c8_asymptotics() -> Outcome {
    let mut report = Vec::new();
    // symplectic hulls have the parity of k, so ℓ = 1 is compared at k = 41
    let cases = [
        (Hermitian, 0, 40, 20),
        (Hermitian, 1, 40, 20),
        (Symplectic, 0, 40, 40),
        (Symplectic, 1, 40, 41),
    ];
    for (inner, ell, n, k) in cases {
        let limit = formulas::limit_density(inner, 2, ell, LIMIT_TOLERANCE).unwrap();
        ensure(limit.error_bound <= LIMIT_TOLERANCE, || {
            format!("error bound {}", limit.error_bound)
        })?;
        let ratio = formulas::finite_ratio(&CountQuery::new(inner, 2, n, k, ell)).unwrap();
        let gap = (ratio - limit.to_f64()).abs();
        ensure(gap <= ASYMPTOTIC_GAP, || {
            format!("{inner} l={ell} k={k}: gap {gap:e}")
        })?;
        report.push(format!("{inner} l={ell} k={k} gap {gap:.1e}"));
    }
    Ok(report.join("; "))
}

fn c9_audit() -> Outcome {
    for q in [2u64, 3] {
        for n in 1..=6u32 {
            for k in 1..=4u32.min(n) {
                let proof = formulas::symplectic_hull_count(q, n, k, k);
                let cor = formulas::symplectic_self_orthogonal_count(q, n, k);
                ensure(proof == cor, || {
                    format!("q={q} n={n} k={k}: {proof} vs {cor}")
                })?;
            }
        }
    }
    let census = census::hull_census(Symplectic, 2, 2, 2, &caps()).unwrap();
    let enumerated = census.count(2).unwrap();
    let alternative = formulas::symplectic_hull_count_alternative(2, 2, 2, 2);
    ensure(
        alternative != BigRational::from_integer(BigInt::from(enumerated)),
        || "the alternative product matches the census".into(),
    )?;
    ensure(
        formulas::symplectic_hull_count(2, 2, 2, 2) == big(enumerated),
        || "proof product misses the census".into(),
    )?;
    Ok(format!(
        "product form matches closed form; alternative gives {alternative} vs census {enumerated}"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            1,
            "worked example reproduction",
            Some(Duration::from_secs(10)),
            c1_worked_example,
        ),
        (
            2,
            "classification reproduction",
            Some(Duration::from_secs(30)),
            c2_classification,
        ),
        (
            3,
            "symplectic reproduction",
            Some(Duration::from_secs(10)),
            c3_symplectic,
        ),
        (
            4,
            "formula-census grid",
            Some(Duration::from_secs(600)),
            c4_grid,
        ),
        (
            5,
            "group-order verification",
            Some(Duration::from_secs(120)),
            c5_groups,
        ),
        (
            6,
            "diagonal-count and Jacobi identities",
            Some(Duration::from_secs(60)),
            c6_diagonal_jacobi,
        ),
        (
            7,
            "constructive-procedure properties",
            Some(Duration::from_secs(120)),
            c7_constructions,
        ),
        (
            8,
            "asymptotics",
            Some(Duration::from_secs(5)),
            c8_asymptotics,
        ),
        (9, "design-decision audit", None, c9_audit),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS criterion {id} ({name}) [{elapsed:.2?}]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}) [{elapsed:.2?}]: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
