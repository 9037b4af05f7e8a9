mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qforms::arith::c_nu;
use qforms::arith::seq::{character, ArithSeq};
use qforms::identities::{run_suite, suite_jobs, verify, verify_mutated};
use qforms::rational::{rat, ratio, Rational};
use qforms::repcount::{r2_jacobi, r3_signed, r_plus3, theorem57_count};
use qforms::residues::th78_classify;
use qforms::series::{product_expand, theta_series};
use std::time::{Duration, Instant};

type Check = fn() -> Result<(), String>;

const CRITERIA: [(u32, &str, u64, Check); 9] = [
    (1, "c_nu spot values", 1, c_nu_spot_values),
    (2, "two squares: formula, lattice and theta square agree to 2000", 10, two_squares),
    (3, "signed cubes against enumeration to 10^4, taxicab 1729", 60, signed_cubes),
    (4, "identity suite at default orders", 300, identity_suite),
    (5, "every mutated identity fails at the mutated exponent", 300, mutations_detected),
    (6, "arithmetic-function properties to 10^4 for nu in 2..=5", 60, arithmetic_properties),
    (7, "no nontrivial cube or fourth-power sums of two powers", 30, power_sums_vanish),
    (8, "residue classification for t = 31", 1, classification_31),
    (9, "performance floor: partitions to 2000 and theta square at 4096", 20, performance_floor),
];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c_nu_spot_values() -> Result<(), String> {
    let cases = [
        (8, 3, rat(1)),
        (16, 3, ratio(-1, 2)),
        (24, 3, ratio(-1, 3)),
        (12, 3, rat(0)),
        (16, 4, rat(1)),
        (16 * 6, 4, ratio(1, 6)),
    ];
    for (n, nu, want) in cases {
        let got = c_nu(n, nu);
        ensure(got == want, || format!("c_{nu}({n}) = {got}, expected {want}"))?;
    }
    Ok(())
}

fn two_squares() -> Result<(), String> {
    let t = theta_series(&rat(1), &rat(0), false, 2001).map_err(|e| e.to_string())?;
    let sq = t.mul(&t).map_err(|e| e.to_string())?;
    for n in 0..=2000u64 {
        let r = r2_jacobi(n);
        let lattice = common::lattice_two_squares(n);
        let theta = sq.coeff(n as i64).map_err(|e| e.to_string())?;
        ensure(r == lattice && theta == rat(r as i64), || format!("n={n}: r2={r} lattice={lattice} theta={theta}"))?;
    }
    Ok(())
}

fn signed_cubes() -> Result<(), String> {
    for n in 1..=10_000u64 {
        let (got, want) = (r3_signed(n), common::cube_pairs(n as i64));
        ensure(got == want, || format!("n={n}: r3={got} enumeration={want}"))?;
    }
    ensure(r_plus3(1729) == 4, || format!("r_plus3(1729) = {}", r_plus3(1729)))
}

const SIGN_PATTERN: [(i64, i64); 8] =
    [(9, 1), (25, -1), (121, -1), (169, 1), (361, 1), (441, -1), (729, -1), (841, 1)];

fn identity_suite() -> Result<(), String> {
    let reports = run_suite(None, None);
    ensure(!reports.is_empty(), || "empty suite".into())?;
    if let Some(r) = reports.iter().find(|r| !r.equal) {
        return Err(r.to_string());
    }
    for g in ["5", "13"] {
        let r = verify("th67", &[("g".into(), g.into())], Some(200)).map_err(|e| e.to_string())?;
        ensure(r.equal, || r.to_string())?;
    }
    let r = verify("eq166", &[], None).map_err(|e| e.to_string())?;
    ensure(r.equal && r.window.1 > 841, || r.to_string())?;
    let lhs = theta_series(&rat(64), &rat(48), true, 842 - 9).map_err(|e| e.to_string())?.shift(9);
    let terms: Vec<(i64, i64)> = lhs.terms().map(|(e, c)| (e, c.to_integer().try_into().unwrap())).collect();
    ensure(terms == SIGN_PATTERN, || format!("odd-square pattern {terms:?}"))
}

fn mutations_detected() -> Result<(), String> {
    for (id, inst) in suite_jobs(None) {
        let m = verify_mutated(id, &inst, None).map_err(|e| e.to_string())?;
        ensure(m.detected(), || format!("{id} {inst:?}: mutation at {} gave {}", m.mutated_at, m.report))?;
    }
    Ok(())
}

fn arithmetic_properties() -> Result<(), String> {
    for nu in 2..=5 {
        common::property_suite(10_000, 31, nu).map_err(|e| format!("nu={nu}: {e}"))?;
    }
    Ok(())
}

fn power_sums_vanish() -> Result<(), String> {
    let one: ArithSeq = character("one").map_err(|e| e.to_string())?;
    for l in 2..=20u64 {
        let v = theorem57_count(l.pow(3), 3, &one);
        ensure(v == rat(0), || format!("l={l}, nu=3: {v}"))?;
    }
    for l in 1..=10u64 {
        let v = theorem57_count(l.pow(4), 4, &one);
        ensure(v == rat(0), || format!("l={l}, nu=4: {v}"))?;
    }
    Ok(())
}

fn classification_31() -> Result<(), String> {
    let c = th78_classify(31).map_err(|e| e.to_string())?;
    ensure(c.s11 == [1, 4, 9, 16, 25], || format!("S11 = {:?}", c.s11))?;
    ensure(c.s12 == [2, 5, 7, 8, 10, 14, 18, 19, 20, 28], || format!("S12 = {:?}", c.s12))?;
    ensure(c.s0 == [31], || format!("S0 = {:?}", c.s0))
}

fn partition_oracle(limit: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); limit];
    p[0] = BigInt::one();
    for part in 1..limit {
        for n in part..limit {
            let prev = p[n - part].clone();
            p[n] += prev;
        }
    }
    p
}

const EACH_LIMIT: Duration = Duration::from_secs(10);

fn timed(what: &str, f: impl FnOnce() -> Result<(), String>) -> Result<(), String> {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took <= EACH_LIMIT, || format!("{what} took {:.2}s", took.as_secs_f64()))
}

fn performance_floor() -> Result<(), String> {
    let want = partition_oracle(2000);
    timed("partitions", || partitions_2000(&want))?;
    timed("theta square", theta_square_4096)
}

fn partitions_2000(want: &[BigInt]) -> Result<(), String> {
    let p = product_expand(&ArithSeq::constant(rat(-1)), 2000);
    for (n, w) in want.iter().enumerate() {
        let got = p.coeff(n as i64).map_err(|e| e.to_string())?;
        ensure(got == Rational::from_integer(w.clone()), || format!("p({n}) = {got}, expected {w}"))?;
    }
    ensure(p.prec() == 2000, || format!("window ends at {}", p.prec()))
}

fn theta_square_4096() -> Result<(), String> {
    let t = theta_series(&rat(1), &rat(0), false, 4096).map_err(|e| e.to_string())?;
    let sq = t.mul(&t).map_err(|e| e.to_string())?;
    for n in [0u64, 1, 5, 25, 4095, 4093, 4000] {
        let got = sq.coeff(n as i64).map_err(|e| e.to_string())?;
        ensure(got == rat(r2_jacobi(n) as i64), || format!("coeff {n} = {got}"))?;
    }
    ensure(sq.prec() == 4096, || format!("window ends at {}", sq.prec()))
}

fn report(label: u32, what: &str, limit: u64, check: Check) -> bool {
    let start = Instant::now();
    let result = check();
    let took = start.elapsed();
    let in_time = took <= Duration::from_secs(limit);
    let pass = result.is_ok() && in_time;
    let status = if pass { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {label}: {status} {what} ({:.2}s, limit {limit}s)", took.as_secs_f64());
    match result {
        Err(e) => line.push_str(&format!(": {e}")),
        Ok(()) if !in_time => line.push_str(": too slow"),
        Ok(()) => {}
    }
    println!("{line}");
    pass
}

fn main() {
    let mut all = true;
    for (n, what, limit, check) in CRITERIA {
        all &= report(n, what, limit, check);
    }
    if all {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
}
