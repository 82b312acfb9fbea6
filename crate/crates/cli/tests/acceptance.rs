//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use centrum_core::harness::{corpus_default, run_all, RowResult, RunOptions, Tier, TierFilter};
use centrum_core::poly::{
    check_poly_property, cross_validate_candidate_set, nilpotent_polys_coeffs_central, verify_poly_witness,
    PolyPropertyId,
};
use centrum_core::properties::{check_property, verify_witness, PropertyId};
use centrum_core::radicals::{prime_radical, prime_radical_by_intersection, singular_ideal};
use centrum_core::{build, build_str, FiniteRing, Limits, Side, Status, Verdict, VerdictLine};

type Check = Result<String, String>;

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ring(src: &str) -> Result<FiniteRing, String> {
    build_str(src, &Limits::default()).map_err(|e| format!("{src}: {e}"))
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn centrum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centrum"))
        .args(args)
        .env_remove("CENTRUM_MAX_ORDER")
        .output()
        .expect("run centrum")
}

fn verdict_line(args: &[&str]) -> Result<(VerdictLine, i32), String> {
    let out = centrum(args);
    let text = String::from_utf8_lossy(&out.stdout);
    let line = VerdictLine::parse(text.trim()).map_err(|e| format!("{args:?}: {e}: {text:?}"))?;
    Ok((line, out.status.code().unwrap_or(-1)))
}

fn pair(r: &FiniteRing, a: &str, x: &str) -> Result<Verdict, String> {
    let a = r.element_by_name(a).map_err(|e| e.to_string())?;
    let x = r.element_by_name(x).map_err(|e| e.to_string())?;
    Ok(Verdict::fails(&[("a", a), ("x", x)]))
}

fn c1() -> Check {
    let t = Instant::now();
    let (cr, code) = verdict_line(&["check", "PolyNil(Z 2, 2)", "central_reduced"])?;
    ensure(cr.status == Status::HoldsExhaustive && code == 0, format!("central_reduced: {cr}"))?;
    let (red, code) = verdict_line(&["check", "PolyNil(Z 2, 2)", "reduced"])?;
    ensure(
        red.status == Status::Fails && red.witness.as_deref() == Some("x") && code == 1,
        format!("reduced: {red}"),
    )?;
    Ok(format!("central_reduced holds, reduced fails at x ({:.2?})", within(t, Duration::from_secs(1))?))
}

fn c2() -> Check {
    let t = Instant::now();
    let r = ring("EqDiagUT(3, Z 2)")?;
    ensure(
        check_property(&r, PropertyId::CentralSemicommutative).status == Status::HoldsExhaustive,
        "central_semicommutative should hold",
    )?;
    ensure(check_property(&r, PropertyId::CentralReduced).is_fail(), "central_reduced should fail")?;
    let w = pair(&r, "[[0,1,1],[0,0,0],[0,0,0]]", "[[1,1,1],[0,1,1],[0,0,1]]")?;
    ensure(verify_witness(&r, PropertyId::CentralReduced, &w), "A, B rejected as a witness")?;
    Ok(format!("A nilpotent, AB != BA ({:.2?})", within(t, Duration::from_secs(1))?))
}

fn c3() -> Check {
    let t = Instant::now();
    let r = ring("UT(2, Z 2)")?;
    let v = check_property(&r, PropertyId::CentralReduced);
    ensure(v.is_fail() && verify_witness(&r, PropertyId::CentralReduced, &v), "UT(2, Z 2) should fail")?;
    let q = ring("Quot(UT(2, Z 2), [[[1,0],[0,0]]])")?;
    ensure(q.order() == 2, format!("quotient has order {}", q.order()))?;
    ensure(check_property(&q, PropertyId::CentralReduced).is_favorable(), "quotient should be central reduced")?;
    Ok(format!("witness {}, R/I of order 2 ({:.2?})", v.render_witness(&r), within(t, Duration::from_secs(1))?))
}

fn c4() -> Check {
    let t = Instant::now();
    let r = ring("CongMat(4)")?;
    ensure(r.order() == 512, format!("order {}", r.order()))?;
    let idem: Vec<&str> = r.idempotents().iter().map(|e| r.name(e)).collect();
    ensure(idem == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"], format!("idempotents {idem:?}"))?;
    ensure(check_property(&r, PropertyId::Abelian).is_favorable(), "abelian should hold")?;
    ensure(check_property(&r, PropertyId::CentralReduced).is_fail(), "central_reduced should fail")?;
    let (a, b) = ("[[0,2],[0,0]]", "[[1,0],[0,3]]");
    let w = pair(&r, a, b)?;
    ensure(verify_witness(&r, PropertyId::CentralReduced, &w), "witness rejected")?;
    let (ea, eb) = (r.element_by_name(a).unwrap(), r.element_by_name(b).unwrap());
    let (ab, ba) = (r.name(r.mul(ea, eb)), r.name(r.mul(eb, ea)));
    ensure(ab == "[[0,6],[0,0]]" && ba == "[[0,2],[0,0]]", format!("AB = {ab}, BA = {ba}"))?;
    Ok(format!("AB = {ab}, BA = {ba} ({:.2?})", within(t, Duration::from_secs(5))?))
}

fn c5() -> Check {
    let t = Instant::now();
    let z4 = ring("Z 4")?;
    ensure(check_property(&z4, PropertyId::CentralReduced).is_favorable(), "Z 4 central_reduced")?;
    ensure(check_property(&z4, PropertyId::RightNonsingular).is_fail(), "Z 4 right_nonsingular should fail")?;
    let sing = z4.format_subset(&singular_ideal(&z4, Side::Right));
    ensure(sing == "{0, 2}", format!("singular ideal {sing}"))?;
    let m = ring("Mat(2, Z 2)")?;
    for p in [PropertyId::RightNonsingular, PropertyId::LeftNonsingular] {
        ensure(check_property(&m, p).is_favorable(), format!("Mat(2, Z 2) {p}"))?;
    }
    ensure(check_property(&m, PropertyId::CentralReduced).is_fail(), "Mat(2, Z 2) central_reduced should fail")?;
    Ok(format!("Z(Z 4) = {sing} ({:.2?})", within(t, Duration::from_secs(1))?))
}

fn c6() -> Check {
    let t = Instant::now();
    let r = ring("EqDiagUT(5, Z 2)")?;
    ensure(r.order() == 2048, format!("order {}", r.order()))?;
    let cr_start = Instant::now();
    let v = check_property(&r, PropertyId::CentralReduced);
    let a = "[[0,0,0,1,1],[0,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0]]";
    let b = "[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,1],[0,0,0,0,1]]";
    let w = pair(&r, a, b)?;
    ensure(v.is_fail(), "central_reduced should fail")?;
    ensure(verify_witness(&r, PropertyId::CentralReduced, &w), "E14+E15 with I+E45 rejected")?;
    let cr_took = within(cr_start, Duration::from_secs(10))?;
    ensure(
        check_property(&r, PropertyId::WeaklySemicommutative).status == Status::HoldsExhaustive,
        "weakly_semicommutative should hold",
    )?;
    Ok(format!(
        "central_reduced part {cr_took:.2?}, total {:.2?}",
        within(t, Duration::from_secs(15 * 60))?
    ))
}

fn c7() -> Check {
    let t = Instant::now();
    let out = centrum(&["theorems", "--tier", "standard"]);
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), format!("exit {:?}", out.status.code()))?;
    let summary = text.lines().find(|l| l.starts_with("summary ")).ok_or("no summary line")?;
    ensure(summary.contains(" violations=0 "), summary.to_string())?;
    ensure(!text.contains("result=VIOLATION"), "violation row present")?;
    let rings: usize = summary
        .split_whitespace()
        .find_map(|f| f.strip_prefix("rings="))
        .and_then(|n| n.parse().ok())
        .ok_or("rings count")?;
    ensure(rings >= 20, format!("{rings} rings"))?;
    let mut ids: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("case=") && !l.contains("result=vacuous"))
        .filter_map(|l| l.split_whitespace().next()?.strip_prefix("case="))
        .collect();
    ids.sort();
    ids.dedup();
    ensure(ids.len() >= 15, format!("{} non-vacuous theorems", ids.len()))?;
    for n in 1..=25 {
        ensure(text.contains(&format!("case=T{n} ")), format!("no rows for T{n}"))?;
    }
    Ok(format!(
        "{rings} rings, {} non-vacuous theorems, 0 violations ({:.2?})",
        ids.len(),
        within(t, Duration::from_secs(60))?
    ))
}

fn c8() -> Check {
    let t = Instant::now();
    let mut n = 0;
    for e in corpus_default() {
        let r = build(&e.expr).map_err(|err| err.to_string())?;
        if r.order() > 16 {
            continue;
        }
        let p = prime_radical(&r);
        let q = prime_radical_by_intersection(&r).map_err(|err| err.to_string())?;
        ensure(p == q, format!("{}: {} vs {}", e.name, r.format_subset(&p), r.format_subset(&q)))?;
        n += 1;
    }
    Ok(format!("{n} rings agree ({:.2?})", within(t, Duration::from_secs(10))?))
}

fn c9() -> Check {
    let t = Instant::now();
    let budget = Limits::default().budget;
    let run = |src: &str, p| -> Result<(FiniteRing, Verdict), String> {
        let r = ring(src)?;
        let v = check_poly_property(&r, p, 2, budget).map_err(|e| e.to_string())?;
        Ok((r, v))
    };
    let (_, v) = run("PolyNil(Z 2, 2)", PolyPropertyId::Armendariz)?;
    ensure(v.status == Status::NoCounterexampleUpTo(2), format!("PolyNil(Z 2, 2): {}", v.status))?;
    let (r, v) = run("PolyNil(Z 4, 2)", PolyPropertyId::Armendariz)?;
    ensure(v.is_fail(), format!("PolyNil(Z 4, 2): {}", v.status))?;
    ensure(verify_poly_witness(&r, PolyPropertyId::Armendariz, &v), "witness rejected")?;
    let witness = v.render_witness(&r);
    let (_, v) = run("PolyNil(Z 4, 2)", PolyPropertyId::CentralArmendariz)?;
    ensure(v.status == Status::HoldsExhaustive, format!("central_armendariz: {}", v.status))?;
    Ok(format!("witness {witness} ({:.2?})", within(t, Duration::from_secs(30))?))
}

fn c10() -> Check {
    let t = Instant::now();
    let budget = Limits::default().budget;
    let (mut searched, mut crossed) = (0, 0);
    for e in corpus_default() {
        let r = build(&e.expr).map_err(|err| err.to_string())?;
        if r.order() > 16 || !check_property(&r, PropertyId::CentralReduced).is_favorable() {
            continue;
        }
        let v = nilpotent_polys_coeffs_central(&r, 2, budget).map_err(|err| err.to_string())?;
        ensure(!v.is_fail(), format!("{}: {}", e.name, v.render_witness(&r)))?;
        searched += 1;
        if r.order() <= 8 {
            let found = cross_validate_candidate_set(&r).map_err(|err| err.to_string())?;
            ensure(found.is_none(), format!("{}: nilpotent polynomial with a non-nilpotent coefficient", e.name))?;
            crossed += 1;
        }
    }
    Ok(format!(
        "{searched} rings searched, {crossed} cross-validated ({:.2?})",
        within(t, Duration::from_secs(60))?
    ))
}

fn c11() -> Check {
    let t = Instant::now();
    let opts = RunOptions {
        only: Some(vec!["T25".into()]),
        ..RunOptions::default()
    };
    let corpus = corpus_default();
    let report = run_all(&corpus, &opts).map_err(|e| e.to_string())?;
    let standard = corpus.iter().filter(|e| e.tier == Tier::Standard).count();
    ensure(report.rows.len() == standard, format!("{} rows for {standard} rings", report.rows.len()))?;
    if let Some(bad) = report.rows.iter().find(|r| r.result != RowResult::Pass) {
        return Err(bad.render());
    }
    Ok(format!("{standard} rings, all pairs ({:.2?})", within(t, Duration::from_secs(30))?))
}

fn c12() -> Check {
    let t = Instant::now();
    let a = centrum(&["theorems"]);
    let b = centrum(&["theorems"]);
    ensure(!a.stdout.is_empty(), "empty report")?;
    ensure(a.stdout == b.stdout, "reports differ")?;
    let direct = run_all(
        &corpus_default(),
        &RunOptions {
            tier: TierFilter::Standard,
            ..RunOptions::default()
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(direct.render().as_bytes() == a.stdout.as_slice(), "library and CLI reports differ")?;
    Ok(format!("{} bytes identical ({:.2?})", a.stdout.len(), t.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("PolyNil(Z 2, 2) central reduced, not reduced", c1),
        ("EqDiagUT(3, Z 2) witness pair", c2),
        ("UT(2, Z 2) and its quotient", c3),
        ("CongMat(4) abelian, not central reduced", c4),
        ("Z 4 and Mat(2, Z 2) nonsingularity", c5),
        ("EqDiagUT(5, Z 2) slow tier", c6),
        ("theorem suite, standard tier", c7),
        ("prime radical oracle", c8),
        ("Armendariz discriminator", c9),
        ("nilpotent coefficient centrality", c10),
        ("sums of central nilpotents", c11),
        ("report determinism", c12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} pass  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
