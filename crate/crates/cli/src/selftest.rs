//! Built-in golden checks. Every item prints one PASS or FAIL line.

use num_bigint::BigInt;
use serde_json::json;
use ulrich_core::graded::{generic_writability_trial, GradedIdealPiece};
use ulrich_core::matfac::{build_factorization, verify_determinantal, verify_power, Decomposition};
use ulrich_core::numerics::{
    bott, check_euler_characteristic, check_serre_duality, ci_cohomology, counting_inequalities, ext_table,
    CIData, CISheaf, CoverSpec,
};
use ulrich_core::par::ExecMode;
use ulrich_core::polyring::{Domain, Monomial, MultiPoly, PolyRing, Scalar, TPoly};

use crate::{Report, EXIT_FALSIFIED};

type Check = Result<String, String>;
type Item = (&'static str, fn() -> Check);

fn ring(domain: Domain) -> PolyRing {
    PolyRing::new(domain, &["x", "y", "z", "w"]).expect("fixed variable names are valid")
}

fn parse_all(r: &PolyRing, src: &[&str]) -> Result<Vec<MultiPoly>, String> {
    src.iter().map(|s| r.parse(s).map_err(|e| e.to_string())).collect()
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn hilbert_zero() -> Check {
    let r = ring(Domain::Rationals);
    let cases: [(&[&str], u32); 3] = [
        (&["x^2", "y^2", "z^2", "w^2", "x*y"], 4),
        (&["x^3", "y^3", "z^3", "w^3", "(x+y+z+w)^3"], 6),
        (&["x^4", "y^4", "z^4", "w^4", "(x+y+z+w)^4"], 8),
    ];
    for (src, deg) in cases {
        let piece = GradedIdealPiece::new(&r, parse_all(&r, src)?, deg).map_err(|e| e.to_string())?;
        expect(&format!("degree {deg}"), piece.hilbert_function_quotient().map_err(|e| e.to_string())?, 0)?;
    }
    Ok("quotients vanish in degrees 4, 6, 8".into())
}

fn integral_quotients() -> Check {
    let r = ring(Domain::Integers);
    let cases: [(&str, &[&str], u32); 2] = [
        ("I", &["x^2", "y^2", "z^2", "w^2", "x*y"], 4),
        ("J", &["x^3+y*z*w", "y^3+z*w*x", "z^3+w*y*x", "w^3+x*y*z", "x^2*z"], 6),
    ];
    for (name, src, deg) in cases {
        let rep = GradedIdealPiece::new(&r, parse_all(&r, src)?, deg)
            .and_then(|p| p.quotient_structure_z())
            .map_err(|e| e.to_string())?;
        expect(&format!("{name} free rank"), rep.free_rank, 0)?;
        expect(&format!("{name} torsion"), rep.torsion.len(), 0)?;
    }
    Ok("I in degree 4 and J in degree 6 have zero quotient over Z".into())
}

/// Shape of the degree-8 cokernel of K. The invariant itself is reported,
/// not asserted: it is Z/32105609 for these generators.
fn k_cokernel() -> Check {
    let r = ring(Domain::Integers);
    let k = parse_all(
        &r,
        &[
            "x^4+x^3*y+x^2*y*z",
            "y^4+y^3*z+y^2*z*w",
            "z^4+z^3*w+z^2*w*x",
            "w^4+w^3*x+w^2*x*y",
            "x*y*z*w+x^2*y^2+x^2*w^2+z^2*w^2+y^2*z^2+y^2*w^2+x^2*y*z",
        ],
    )?;
    let rep = GradedIdealPiece::new(&r, k, 8).and_then(|p| p.quotient_structure_z()).map_err(|e| e.to_string())?;
    expect("K free rank", rep.free_rank, 0)?;
    expect("K invariant count", rep.torsion.len(), 1)?;
    expect("K representative", rep.torsion_reps.clone(), vec![Monomial::new(vec![0, 0, 0, 8])])?;
    Ok(format!("K in degree 8 is cyclic torsion Z/{} generated by w^8", rep.torsion[0]))
}

fn corank_basis() -> Check {
    let r = PolyRing::new(Domain::Rationals, &["x", "y", "z", "v", "w"]).map_err(|e| e.to_string())?;
    let piece = GradedIdealPiece::new(&r, parse_all(&r, &["x^2", "y^2", "z^2", "v^2", "w^2"])?, 4)
        .map_err(|e| e.to_string())?;
    let mut got: Vec<String> = piece
        .quotient_basis()
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|m| r.term(m, Domain::Rationals.one()).to_string())
        .collect();
    got.sort();
    let mut want = vec!["x*y*z*v", "x*y*z*w", "x*y*v*w", "x*z*v*w", "y*z*v*w"];
    want.sort();
    expect("basis", got, want.into_iter().map(String::from).collect())?;
    Ok("five squarefree quartics".into())
}

fn ext_rows() -> Check {
    let r = ring(Domain::Rationals);
    for (m, row) in [(2, [8, 0, 1, 5, 0, 0]), (3, [9, 0, 1, 6, 0, 0]), (4, [3, 3, 1, 0, 0, 1])] {
        let src: Vec<String> = ["x", "y", "z", "w", "(x+y+z+w)"].iter().map(|v| format!("{v}^{m}")).collect();
        let src: Vec<&str> = src.iter().map(String::as_str).collect();
        let t = ext_table(m, &parse_all(&r, &src)?).map_err(|e| e.to_string())?;
        expect(&format!("m={m} q"), t.q, 0)?;
        expect(&format!("m={m} row"), t.row(), row)?;
    }
    Ok("rows for m = 2, 3, 4".into())
}

fn cubic_template() -> Check {
    let r = ring(Domain::PrimeField(7));
    let p = parse_all(&r, &["x", "y", "z", "w"])?;
    let dec = Decomposition::new(&r, 3, Some(p[0].clone()), vec![p[1..].to_vec()]).map_err(|e| e.to_string())?;
    let f = build_factorization(&dec, Some(Scalar::Modular(2))).map_err(|e| e.to_string())?;
    let want = vec![vec!["x", "y", "0"], vec!["0", "2*x", "z"], vec!["w", "0", "4*x"]];
    let want: Vec<Vec<String>> = want.into_iter().map(|r| r.into_iter().map(String::from).collect()).collect();
    expect("matrix", f.matrix().to_strings(), want)?;
    let b = r.parse("x^3 + y*z*w").map_err(|e| e.to_string())?;
    expect("power", verify_power(f.matrix(), 3, &b).map_err(|e| e.to_string())?.holds, true)?;
    expect(
        "characteristic polynomial",
        verify_determinantal(f.matrix(), &TPoly::cyclic(3, &b), 1).map_err(|e| e.to_string())?,
        true,
    )?;
    Ok("A^3 = (x^3 + yzw) I over F_7 with zeta = 2".into())
}

/// The top row taken literally as C(i-1, n) instead of C(-i-1, n).
fn shifted_top_row(n: u32, i: i64, j: u32) -> BigInt {
    if j == n && i < -i64::from(n) {
        ulrich_core::numerics::binomial(i - 1, n.into())
    } else {
        bott(n, i, j)
    }
}

fn bott_values() -> Check {
    expect("h0(P3, O(2))", bott(3, 2, 0), BigInt::from(10))?;
    expect("h3(P3, O(-4))", bott(3, -4, 3), BigInt::from(1))?;
    for j in 0..=3 {
        expect("h(P3, O(-2))", bott(3, -2, j), BigInt::from(0))?;
    }
    if let Some(bad) = check_serre_duality(bott, 5, 12) {
        return Err(format!("duality fails at {bad:?}"));
    }
    if let Some(bad) = check_euler_characteristic(bott, 5, 12) {
        return Err(format!("Euler characteristic fails at {bad:?}"));
    }
    if check_serre_duality(shifted_top_row, 5, 12).is_none() {
        return Err("duality check accepts a shifted top row".into());
    }
    Ok("values, duality and Euler characteristic for n <= 5".into())
}

fn ci_values() -> Check {
    let z = CIData::new(3, 2).map_err(|e| e.to_string())?;
    let h = |sheaf, i, j| ci_cohomology(z, sheaf, i, j).map_err(|e| e.to_string());
    expect("h0(I_Z(2))", h(CISheaf::Ideal, 2, 0)?, BigInt::from(2))?;
    expect("h1(I_Z(2))", h(CISheaf::Ideal, 2, 1)?, BigInt::from(0))?;
    expect("h0(O_Z(2))", h(CISheaf::Structure, 2, 0)?, BigInt::from(8))?;
    expect("h0(O_Z(4))", h(CISheaf::Structure, 4, 0)?, BigInt::from(16))?;
    expect("h1(O_Z(2))", h(CISheaf::Structure, 2, 1)?, bott(3, -2, 3))?;
    Ok("(2,2) complete intersection in P3".into())
}

fn counts() -> Check {
    for m in 2..=20 {
        let c = counting_inequalities(3, m).map_err(|e| e.to_string())?;
        if !c.rank1_gap.is_some_and(|g| g > 0) {
            return Err(format!("rank1_gap(3, {m}) = {:?}", c.rank1_gap));
        }
    }
    expect("rank2_gap(4, 2)", counting_inequalities(4, 2).map_err(|e| e.to_string())?.rank2_gap, -5)?;
    let noic: Vec<(i64, i64)> = (2..=4)
        .map(|m| counting_inequalities(3, m).map(|c| (c.noic_dim, c.noic_codim)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    expect("noic", noic, vec![(35, 1), (75, 10), (135, 31)])?;
    Ok("rank-one gaps, rank2_gap(4, 2) = -5, noic dimensions".into())
}

fn cover_numbers() -> Check {
    let c = CoverSpec::new(3, 2, 2).map_err(|e| e.to_string())?;
    expect("splitting", c.pushforward_splitting(), vec![0, -2])?;
    expect("canonical twist", c.canonical_twist(), -2)?;
    expect("octic twist", CoverSpec::new(3, 4, 2).map_err(|e| e.to_string())?.canonical_twist(), 0)?;
    expect("Ulrich degree", c.ulrich_degree(2), 4)?;
    expect("c2 degree", c.c2_degree_rank2().map_err(|e| e.to_string())?, 4)?;
    let p = c.ulrich_hilbert(2);
    expect("h0", p.eval_integer(0), Some(BigInt::from(4)))?;
    for t in -3..=-1 {
        expect("root", p.eval_integer(t), Some(BigInt::from(0)))?;
    }
    Ok("double quartic solid invariants".into())
}

fn genericity() -> Check {
    let mut seen = Vec::new();
    for m in 2..=4 {
        let s = generic_writability_trial(4, m, Domain::PrimeField(101), 10, 0, ExecMode::Parallel)
            .map_err(|e| e.to_string())?;
        if s.successes < 9 {
            return Err(format!("m={m}: {}/10", s.successes));
        }
        seen.push(format!("m={m}: {}/10", s.successes));
    }
    Ok(seen.join(", "))
}

pub fn run() -> Report {
    let items: [Item; 11] = [
        ("hilbert-zero", hilbert_zero),
        ("integral-quotients", integral_quotients),
        ("k-cokernel", k_cokernel),
        ("corank-basis", corank_basis),
        ("ext-rows", ext_rows),
        ("cubic-template", cubic_template),
        ("bott", bott_values),
        ("complete-intersection", ci_values),
        ("counts", counts),
        ("cover", cover_numbers),
        ("genericity", genericity),
    ];
    let mut text = Vec::new();
    let mut results = Vec::new();
    let mut failures = 0;
    for (name, check) in items {
        let (ok, detail) = match check() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        failures += usize::from(!ok);
        text.push(format!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" }));
        results.push(json!({"item": name, "pass": ok, "detail": detail}));
    }
    text.push(format!("selftest: {} passed, {failures} failed", items.len() - failures));
    let result = json!({"items": results, "failures": failures});
    let report = Report::new("selftest", "golden values recomputed from scratch", result, text);
    if failures > 0 {
        Report { exit_code: EXIT_FALSIFIED, ..report }
    } else {
        report
    }
}
