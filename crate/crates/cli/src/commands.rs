use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use ulrich_core::exactlinalg::PolyMatrix;
use ulrich_core::graded::{generic_writability_trial, GradedIdealPiece, DEFAULT_TRIAL_PRIME};
use ulrich_core::matfac::{
    build_factorization, skew_symmetrize_d2, verify_determinantal, verify_power, Decomposition,
};
use ulrich_core::numerics::{
    bott, ci_cohomology, ci_euler_characteristic, counting_inequalities, ext_table, hilbert_poly_ci, CIData,
    CISheaf,
};
use ulrich_core::par::ExecMode;
use ulrich_core::polyring::{smallest_prime_with_roots_of_unity, Domain, MultiPoly, PolyRing, Scalar, TPoly};
use ulrich_core::exactlinalg::MAX_DET_SIZE;

use crate::args::{
    BottArgs, CiArgs, Cli, Command, CountsArgs, ExtArgs, FactorizeArgs, GenericArgs, IdealArgs, PfaffianArgs,
    PolyInput, SheafArg, VarArgs, VerifyArgs,
};
use crate::{selftest, CliError, Report};

type CliResult<T> = Result<T, CliError>;

pub fn dispatch(cli: Cli) -> CliResult<Report> {
    let field = cli.field.as_deref();
    match cli.command {
        Command::Hilb(a) => hilb(&a, parse_domain(field, Domain::Rationals)?),
        Command::QuotientZ(a) => {
            if parse_domain(field, Domain::Integers)? != Domain::Integers {
                return Err(CliError::Usage("quotient-z works over z only".into()));
            }
            hilb(&a, Domain::Integers)
        }
        Command::Factorize(a) => factorize(&a, field),
        Command::Verify(a) => verify(&a, parse_domain(field, Domain::Rationals)?),
        Command::Pfaffian(a) => pfaffian(&a, parse_domain(field, Domain::Rationals)?),
        Command::ExtTable(a) => ext(&a, parse_domain(field, Domain::Rationals)?),
        Command::Bott(a) => bott_cmd(&a),
        Command::Ci(a) => ci(&a),
        Command::GenericCheck(a) => generic(&a, parse_domain(field, Domain::PrimeField(DEFAULT_TRIAL_PRIME))?, cli.seed),
        Command::Counts(a) => counts(&a),
        Command::Selftest => Ok(selftest::run()),
    }
}

pub fn parse_domain(field: Option<&str>, default: Domain) -> CliResult<Domain> {
    let Some(text) = field else { return Ok(default) };
    match text {
        "q" | "Q" => Ok(Domain::Rationals),
        "z" | "Z" => Ok(Domain::Integers),
        _ => {
            let p = text
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Usage(format!("--field expects q, z or fp:<prime>, got `{text}`")))?;
            Ok(Domain::prime_field(p)?)
        }
    }
}

fn ring(vars: &VarArgs, domain: Domain) -> CliResult<PolyRing> {
    match (&vars.vars, vars.nvars) {
        (Some(names), _) => {
            let names: Vec<&str> = names.split(',').map(str::trim).collect();
            Ok(PolyRing::new(domain, &names)?)
        }
        (None, Some(n)) => Ok(PolyRing::with_default_names(domain, n)),
        (None, None) => Ok(PolyRing::new(domain, &["x", "y", "z", "w"])?),
    }
}

fn parse_poly(ring: &PolyRing, text: &str) -> CliResult<MultiPoly> {
    ring.parse(text).map_err(|e| CliError::Usage(format!("in `{text}`: {e}")))
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Inline generators first, then the file's lines with `#` comments removed.
fn generator_texts(input: &PolyInput) -> CliResult<Vec<String>> {
    let mut out = input.exprs.clone();
    if let Some(path) = &input.gens {
        for line in read_file(path)?.lines() {
            let line = line.split('#').next().unwrap_or_default().trim();
            if !line.is_empty() {
                out.push(line.to_string());
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("no generators given; use -e or --gens".into()));
    }
    Ok(out)
}

fn generators(ring: &PolyRing, input: &PolyInput) -> CliResult<Vec<MultiPoly>> {
    generator_texts(input)?.iter().map(|t| parse_poly(ring, t)).collect()
}

fn hilb(a: &IdealArgs, domain: Domain) -> CliResult<Report> {
    let r = ring(&a.vars, domain)?;
    let piece = GradedIdealPiece::new(&r, generators(&r, &a.input)?, a.deg)?;
    if domain == Domain::Integers {
        let rep = piece.quotient_structure_z()?;
        let torsion: Vec<String> = rep.torsion.iter().map(ToString::to_string).collect();
        let reps: Vec<String> = rep.torsion_reps.iter().map(|m| r.term(m.clone(), domain.one()).to_string()).collect();
        let text = vec![
            format!("ambient_dim: {}", rep.ambient_dim),
            format!("ideal_dim: {}", rep.ideal_rank),
            format!("free_rank: {}", rep.free_rank),
            format!("torsion: [{}]", torsion.join(", ")),
            format!("torsion_reps: [{}]", reps.join(", ")),
        ];
        let result = json!({
            "ambient_dim": rep.ambient_dim,
            "ideal_dim": rep.ideal_rank,
            "free_rank": rep.free_rank,
            "torsion": torsion,
            "torsion_reps": reps,
        });
        return Ok(Report::new("quotient-z", "Smith normal form of the degree piece over Z", result, text));
    }
    let rep = piece.field_report()?;
    let mut text = vec![
        format!("ambient_dim: {}", rep.ambient_dim),
        format!("ideal_dim: {}", rep.ideal_dim),
        format!("quotient_dim: {}", rep.quotient_dim),
    ];
    let mut result = json!({
        "field": domain.to_string(),
        "ambient_dim": rep.ambient_dim,
        "ideal_dim": rep.ideal_dim,
        "quotient_dim": rep.quotient_dim,
    });
    if a.basis {
        let basis: Vec<String> =
            piece.quotient_basis()?.into_iter().map(|m| r.term(m, domain.one()).to_string()).collect();
        text.push(format!("basis: [{}]", basis.join(", ")));
        result["basis"] = json!(basis);
    }
    Ok(Report::new("hilb", "Hilbert function of the quotient in one degree", result, text))
}

/// Picks the domain and root of unity for `factorize`.
fn factorization_domain(d: u32, field: Option<&str>, zeta: Option<u64>) -> CliResult<(Domain, Option<Scalar>)> {
    let requested = parse_domain(field, Domain::Rationals)?;
    match requested {
        Domain::PrimeField(_) => {
            let z = match zeta {
                Some(z) => Some(Scalar::Modular(z)),
                None => requested.primitive_root_of_unity(d.into()),
            };
            Ok((requested, z))
        }
        _ if d <= 2 => {
            if zeta.is_some() {
                return Err(CliError::Usage("--zeta needs a prime field".into()));
            }
            Ok((requested, None))
        }
        _ => {
            let p = smallest_prime_with_roots_of_unity(d.into());
            let dom = Domain::prime_field(p)?;
            let z = match zeta {
                Some(z) => Some(Scalar::Modular(z)),
                None => dom.primitive_root_of_unity(d.into()),
            };
            Ok((dom, z))
        }
    }
}

fn factorize(a: &FactorizeArgs, field: Option<&str>) -> CliResult<Report> {
    let (domain, zeta) = factorization_domain(a.d, field, a.zeta)?;
    let r = ring(&a.vars, domain)?;
    let p0 = a.p0.as_deref().map(|t| parse_poly(&r, t)).transpose()?;
    let products = a
        .prods
        .iter()
        .map(|p| p.split(',').map(|t| parse_poly(&r, t.trim())).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    let dec = Decomposition::new(&r, a.d, p0, products)?;
    let f = build_factorization(&dec, zeta.clone())?;
    let cert = f.certificate();
    let mut text = vec![
        format!("field: {domain}"),
        format!("d: {}", cert.d),
        format!("size: {}", cert.size),
        format!("rank: {}", cert.rank),
        format!("b: {}", cert.b),
    ];
    if let Some(Scalar::Modular(v)) = &zeta {
        text.push(format!("zeta: {v}"));
    }
    text.push("A:".into());
    text.extend(cert.a.iter().map(|row| format!("  [{}]", row.join(", "))));
    text.push(format!("verified: {}", cert.verified));
    let mut result = serde_json::to_value(&cert).map_err(|source| CliError::Json { path: "<certificate>".into(), source })?;
    result["field"] = json!(domain.to_string());
    if let Some(Scalar::Modular(v)) = zeta {
        result["zeta"] = json!(v);
    }
    Ok(Report::new("factorize", "cyclic factorization A^d = b I built from the decomposition", result, text))
}

fn read_matrix(r: &PolyRing, path: &Path) -> CliResult<PolyMatrix> {
    let raw = read_file(path)?;
    let value: Value =
        serde_json::from_str(&raw).map_err(|source| CliError::Json { path: path.display().to_string(), source })?;
    // Accepts bare rows, a certificate, or the JSON envelope around one.
    let rows = value
        .get("A")
        .or_else(|| value.get("result").and_then(|r| r.get("A")))
        .unwrap_or(&value);
    let bad = || CliError::Usage(format!("{}: expected an array of rows of strings", path.display()));
    let rows = rows
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|e| e.as_str().ok_or_else(bad).and_then(|t| parse_poly(r, t)))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(PolyMatrix::from_rows(rows)?)
}

fn verify(a: &VerifyArgs, domain: Domain) -> CliResult<Report> {
    let r = ring(&a.vars, domain)?;
    let b = parse_poly(&r, &a.b)?;
    let m = read_matrix(&r, &a.matrix)?;
    let check = verify_power(&m, a.d, &b)?;
    let size = m.size();
    let determinantal = if check.holds && a.d > 0 && size % a.d as usize == 0 && size <= MAX_DET_SIZE {
        Some(verify_determinantal(&m, &TPoly::cyclic(a.d as usize, &b), size / a.d as usize)?)
    } else {
        None
    };
    let verified = check.holds && determinantal != Some(false);
    let mut text = vec![format!("size: {size}"), format!("verified: {verified}")];
    if let Some((i, j)) = check.first_mismatch {
        text.push(format!("first_mismatch: ({i}, {j})"));
    }
    if let Some(det) = determinantal {
        text.push(format!("determinantal: {det}"));
    }
    let result = json!({
        "d": a.d,
        "size": size,
        "verified": verified,
        "power_holds": check.holds,
        "first_mismatch": check.first_mismatch,
        "determinantal": determinantal,
    });
    Ok(Report::new("verify", "checks A^d = b I and det(t I - A) = (t^d - b)^r", result, text).falsified_unless(verified))
}

fn pfaffian(a: &PfaffianArgs, domain: Domain) -> CliResult<Report> {
    let r = ring(&a.vars, domain)?;
    let m = read_matrix(&r, &a.matrix)?;
    let skew = skew_symmetrize_d2(&m)?;
    let rows: Vec<Vec<String>> =
        (0..skew.matrix.rows()).map(|i| skew.matrix.row(i).iter().map(ToString::to_string).collect()).collect();
    let mut text = vec![
        format!("rows: {:?}", skew.rows),
        format!("signs: {:?}", skew.signs),
        "S:".to_string(),
    ];
    text.extend(rows.iter().map(|row| format!("  [{}]", row.join(", "))));
    text.push(format!("pfaffian: {}", skew.pfaffian));
    let mut result = json!({
        "rows": skew.rows,
        "signs": skew.signs,
        "S": rows,
        "pfaffian": skew.pfaffian.to_string(),
    });
    let mut holds = true;
    if let Some(b) = &a.b {
        let target = TPoly::cyclic(2, &parse_poly(&r, b)?);
        holds = skew.pfaffian == target || skew.pfaffian == target.neg();
        text.push(format!("matches_branch: {holds}"));
        result["matches_branch"] = json!(holds);
    }
    Ok(Report::new("pfaffian", "skew-symmetric form of t I - A and its Pfaffian", result, text).falsified_unless(holds))
}

fn ext(a: &ExtArgs, domain: Domain) -> CliResult<Report> {
    let r = ring(&a.vars, domain)?;
    let t = ext_table(a.m, &generators(&r, &a.input)?)?;
    let text = vec![
        "m  q  h0N  h1N  hom  ext1  ext2  ext3".to_string(),
        format!(
            "{}  {}  {}  {}  {}  {}  {}  {}",
            t.m, t.q, t.h0n, t.h1n, t.hom, t.ext1, t.ext2, t.ext3
        ),
        format!("valid: {}", t.valid),
    ];
    let result = serde_json::to_value(&t).map_err(|source| CliError::Json { path: "<table>".into(), source })?;
    Ok(Report::new("ext-table", "normal-bundle and ext dimensions; exact when q = 0", result, text))
}

fn bott_cmd(a: &BottArgs) -> CliResult<Report> {
    let js: Vec<u32> = match a.j {
        Some(j) if j > a.n => return Err(CliError::Usage(format!("--j must be at most n = {}", a.n))),
        Some(j) => vec![j],
        None => (0..=a.n).collect(),
    };
    let values: Vec<(u32, String)> = js.iter().map(|&j| (j, bott(a.n, a.i, j).to_string())).collect();
    let text = values.iter().map(|(j, v)| format!("h^{j}(P^{}, O({})) = {v}", a.n, a.i)).collect();
    let result = json!({
        "n": a.n,
        "i": a.i,
        "values": values.iter().map(|(j, v)| json!({"j": j, "h": v})).collect::<Vec<_>>(),
    });
    Ok(Report::new(
        "bott",
        "line bundle cohomology on projective space; top row C(-i-1, n)",
        result,
        text,
    ))
}

fn ci(a: &CiArgs) -> CliResult<Report> {
    let z = CIData::new(a.n, a.m)?;
    let i = a.i.unwrap_or(i64::from(a.m));
    let (sheaf, name) = match a.sheaf {
        SheafArg::Ideal => (CISheaf::Ideal, "I_Z"),
        SheafArg::Structure => (CISheaf::Structure, "O_Z"),
    };
    let hs = (0..=a.n).map(|j| ci_cohomology(z, sheaf, i, j).map(|h| h.to_string())).collect::<Result<Vec<_>, _>>()?;
    let chi = ci_euler_characteristic(z, sheaf, i)?.to_string();
    let poly = hilbert_poly_ci(z)?;
    let mut text: Vec<String> = hs.iter().enumerate().map(|(j, h)| format!("h^{j}({name}({i})) = {h}")).collect();
    text.push(format!("chi: {chi}"));
    text.push(format!("hilbert_poly(I_Z({}))(t): {poly}", a.m));
    let result = json!({
        "n": a.n,
        "m": a.m,
        "sheaf": name,
        "i": i,
        "h": hs,
        "chi": chi,
        "hilbert_poly": poly.to_string(),
    });
    Ok(Report::new("ci", "Koszul cohomology of an (m, m) complete intersection", result, text))
}

fn generic(a: &GenericArgs, domain: Domain, seed: u64) -> CliResult<Report> {
    let mode = if a.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    let s = generic_writability_trial(a.nvars, a.m, domain, a.trials, seed, mode)?;
    let text = vec![
        format!("field: {domain}"),
        format!("nvars: {}  m: {}  seed: {seed}", s.nvars, s.m),
        format!("successes: {}/{}", s.successes, s.trials),
        format!(
            "outcomes: {}",
            s.outcomes.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>()
        ),
    ];
    let mut result = serde_json::to_value(&s).map_err(|source| CliError::Json { path: "<trials>".into(), source })?;
    result["field"] = json!(domain.to_string());
    result["seed"] = json!(seed);
    Ok(Report::new("generic-check", "random forms; surjectivity of (q_i) -> 2 p0 q0 + sum p_i q_i", result, text))
}

fn counts(a: &CountsArgs) -> CliResult<Report> {
    let c = counting_inequalities(a.n, a.m)?;
    let mut text = vec![format!("n: {}  m: {}", c.n, c.m)];
    if let Some(g) = c.rank1_gap {
        text.push(format!("rank1_gap: {g}"));
    }
    text.push(format!("rank2_gap: {}", c.rank2_gap));
    text.push(format!("noic_dim: {}", c.noic_dim));
    text.push(format!("noic_codim: {}", c.noic_codim));
    let result = serde_json::to_value(&c).map_err(|source| CliError::Json { path: "<counts>".into(), source })?;
    Ok(Report::new("counts", "parameter counts for rank one and rank two sheaves", result, text))
}
