//! Command-line front end: compute crossing data, verify plans, evaluate
//! invariants, reproduce the companion program outputs, render diagrams, and emit
//! batch tables.
//!
//! Exit codes: 0 success/verified, 1 verified-nontrivial (or failed
//! certificate check), 2 usage/parse error, 3 inconclusive.

use std::collections::BTreeSet;
use std::process::ExitCode;

use unknot::braid::BraidWord;
use unknot::config::RunConfig;
use unknot::invariants::{
    alexander_of_closure, jones_of_closure, TrivialityStatus, TrivialityVerdict,
};
use unknot::render::render_braid_svg;
use unknot::toric::{
    matlab_parity, minimal_ucd, mirrored_ucd, u_crossing_data, unknotting_number, verify_plan,
    verify_plan_mirrored, verify_positions,
};
use unknot::word_problem::Certificate;

const USAGE: &str = "usage:
  unknot ucd <p> <q> [--minimal|--procedure] [--mirror] [--json]
  unknot verify <p> <q> [--plan FILE] [--certificate FILE] [--budget N]
  unknot invariant <alexander|jones> --braid \"<ints>\" --strands N [--budget N] [--json]
  unknot parity <p> <q> [--as-printed|--corrected] [--budget N]
  unknot render <p> <q> [--highlight minimal|procedure|none] [-o FILE]
  unknot table --pmax P --qmax Q [--budget N]

Braid words are whitespace-separated nonzero integers: k is the k-th positive
elementary crossing, -k its inverse; the strand count is always explicit.
Budgets default from UNKNOT_CROSSING_BUDGET / UNKNOT_CERT_BUDGET.";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let mut it = args.iter();
    let cmd = it.next().ok_or("missing command")?;
    let rest: Vec<&String> = it.collect();
    match cmd.as_str() {
        "ucd" => cmd_ucd(&rest),
        "verify" => cmd_verify(&rest),
        "invariant" => cmd_invariant(&rest),
        "parity" => cmd_parity(&rest),
        "render" => cmd_render(&rest),
        "table" => cmd_table(&rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command {other:?}")),
    }
}

const MAX_PQ: usize = 10_000;
const MAX_STRANDS: usize = 256;

fn parse_pq(rest: &[&String]) -> Result<(usize, usize, Vec<String>), String> {
    if rest.len() < 2 {
        return Err("expected <p> <q>".into());
    }
    let p = rest[0].parse::<usize>().map_err(|_| format!("bad p {:?}", rest[0]))?;
    let q = rest[1].parse::<usize>().map_err(|_| format!("bad q {:?}", rest[1]))?;
    if p > MAX_PQ || q > MAX_PQ {
        return Err(format!("p and q must be at most {MAX_PQ}"));
    }
    Ok((p, q, rest[2..].iter().map(|s| s.to_string()).collect()))
}

fn reject_unknown(flags: &[String], known: &[&str]) -> Result<(), String> {
    for f in flags {
        if f.starts_with('-') && !known.contains(&f.as_str()) {
            return Err(format!("unknown flag {f:?}"));
        }
    }
    Ok(())
}

fn flag_value(flags: &[String], name: &str) -> Result<Option<String>, String> {
    let mut i = 0;
    while i < flags.len() {
        if flags[i] == name {
            let v = flags.get(i + 1).ok_or(format!("{name} needs a value"))?;
            return Ok(Some(v.clone()));
        }
        i += 1;
    }
    Ok(None)
}

fn budget_config(flags: &[String]) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::from_env();
    if let Some(v) = flag_value(flags, "--budget")? {
        let n = v.parse::<usize>().map_err(|_| format!("bad budget {v:?}"))?;
        if n == 0 {
            return Err("budget must be positive".into());
        }
        cfg = cfg.with_budget(n);
    }
    Ok(cfg)
}

fn cmd_ucd(rest: &[&String]) -> Result<ExitCode, String> {
    let (p, q, flags) = parse_pq(rest)?;
    reject_unknown(&flags, &["--minimal", "--procedure", "--mirror", "--json"])?;
    let minimal = !flags.iter().any(|f| f == "--procedure");
    let mirror = flags.iter().any(|f| f == "--mirror");
    let json = flags.iter().any(|f| f == "--json");

    let plan = minimal_ucd(p, q).map_err(|e| e.to_string())?;
    if json {
        if minimal && !mirror {
            println!("{}", serde_json::to_string_pretty(&plan.to_json()).unwrap());
        } else {
            let positions: Vec<usize> = if mirror {
                mirrored_ucd(&plan).as_slice().to_vec()
            } else {
                u_crossing_data(p, q).map_err(|e| e.to_string())?.as_slice().to_vec()
            };
            let v = serde_json::json!({ "p": p, "q": q, "positions": positions });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        return Ok(ExitCode::SUCCESS);
    }

    if mirror {
        let m = mirrored_ucd(&plan);
        println!("mirrored crossing data (for the reversed braid): {:?}", m.as_slice());
        println!("count: {}", m.len());
        return Ok(ExitCode::SUCCESS);
    }
    if minimal {
        println!(
            "minimal unknotting crossing data for B({p},{q}): {:?}",
            plan.positions.as_slice()
        );
        println!("count: {}", plan.positions.len());
        println!("unknotting number: {}", unknotting_number(p, q));
        println!("trace:");
        for s in &plan.trace.steps {
            println!(
                "  step {} ({:?}): (p, q) = ({}, {}), m = {}, a = {}",
                s.index, s.parity, s.p, s.q, s.m, s.a
            );
        }
        println!("terminal rule: {:?}", plan.trace.terminal);
    } else {
        let ucd = u_crossing_data(p, q).map_err(|e| e.to_string())?;
        println!("u-crossing data for B({p},{q}): {:?}", ucd.as_slice());
        println!("count: {}", ucd.len());
        println!("unknotting number: {}", unknotting_number(p, q));
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_exit(v: &TrivialityVerdict) -> ExitCode {
    match v.status {
        TrivialityStatus::CertifiedTrivialUnlink => ExitCode::from(0),
        TrivialityStatus::CertifiedNontrivial => ExitCode::from(1),
        TrivialityStatus::Inconclusive => ExitCode::from(3),
    }
}

fn print_verdict(v: &TrivialityVerdict) {
    println!("verdict: {}", v.status);
    println!(
        "  components: {} (expected {})",
        v.evidence.component_count, v.evidence.expected_components
    );
    if let Some(a) = &v.evidence.alexander {
        println!(
            "  alexander: {} (unlink match: {})",
            a.render("t", false),
            v.evidence.alexander_matches_unlink.unwrap_or(false)
        );
    }
    match (&v.evidence.jones, v.evidence.jones_refused) {
        (Some(j), _) => println!(
            "  jones: {} (unlink match: {})",
            j.render("t", true),
            v.evidence.jones_matches_unlink.unwrap_or(false)
        ),
        (None, true) => println!("  jones: refused (over crossing budget)"),
        _ => {}
    }
    match v.evidence.certificate_valid {
        Some(true) => println!("  certificate: found and replayed"),
        Some(false) => println!("  certificate: provided but failed to replay"),
        None => println!("  certificate: none"),
    }
}

fn cmd_verify(rest: &[&String]) -> Result<ExitCode, String> {
    let (p, q, flags) = parse_pq(rest)?;
    reject_unknown(&flags, &["--plan", "--certificate", "--budget"])?;
    let cfg = budget_config(&flags)?;

    if let Some(path) = flag_value(&flags, "--certificate")? {
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
        let cert = Certificate::from_text(&text).map_err(|e| e.to_string())?;
        return match cert.check() {
            Ok(()) => {
                println!(
                    "certificate valid: `{}` on {} strands ~ `{}` on {} strands ({} steps)",
                    cert.start,
                    cert.start.strands(),
                    cert.end,
                    cert.end.strands(),
                    cert.steps.len()
                );
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                println!("certificate INVALID: {e}");
                Ok(ExitCode::from(1))
            }
        };
    }

    let positions: Vec<usize> = match flag_value(&flags, "--plan")? {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            let file_p = v["p"].as_u64().ok_or("plan file missing p")? as usize;
            let file_q = v["q"].as_u64().ok_or("plan file missing q")? as usize;
            if file_p != p || file_q != q {
                return Err(format!(
                    "plan file is for ({file_p},{file_q}), command line says ({p},{q})"
                ));
            }
            v["positions"]
                .as_array()
                .ok_or("plan file missing positions")?
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad position".to_string()))
                .collect::<Result<Vec<_>, _>>()?
        }
        None => minimal_ucd(p, q).map_err(|e| e.to_string())?.positions.as_slice().to_vec(),
    };

    let verdict = verify_positions(p, q, &positions, &cfg).map_err(|e| e.to_string())?;
    println!("B({p},{q}) flipped at {positions:?}");
    print_verdict(&verdict);
    Ok(verdict_exit(&verdict))
}

fn cmd_invariant(rest: &[&String]) -> Result<ExitCode, String> {
    if rest.is_empty() {
        return Err("expected invariant kind: alexander or jones".into());
    }
    let kind = rest[0].as_str();
    let flags: Vec<String> = rest[1..].iter().map(|s| s.to_string()).collect();
    reject_unknown(&flags, &["--braid", "--strands", "--budget", "--json"])?;
    let braid_text = flag_value(&flags, "--braid")?.ok_or("missing --braid")?;
    let strands: usize = flag_value(&flags, "--strands")?
        .ok_or("missing --strands")?
        .parse()
        .map_err(|_| "bad --strands value".to_string())?;
    if !(1..=MAX_STRANDS).contains(&strands) {
        return Err(format!("--strands must be in 1..={MAX_STRANDS}"));
    }
    let cfg = budget_config(&flags)?;
    let json = flags.iter().any(|f| f == "--json");
    let word = BraidWord::parse(strands, &braid_text).map_err(|e| e.to_string())?;
    match kind {
        "alexander" => {
            let poly = alexander_of_closure(&word);
            if json {
                println!("{}", serde_json::to_string(&poly.to_json(false)).unwrap());
            } else {
                println!("{}", poly.render("t", false));
            }
            Ok(ExitCode::SUCCESS)
        }
        "jones" => match jones_of_closure(&word, cfg.crossing_budget) {
            Ok(poly) => {
                if json {
                    println!("{}", serde_json::to_string(&poly.to_json(true)).unwrap());
                } else {
                    println!("{}", poly.render("t", true));
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => Err(e.to_string()),
        },
        other => Err(format!("unknown invariant {other:?}")),
    }
}

fn cmd_parity(rest: &[&String]) -> Result<ExitCode, String> {
    let (p, q, flags) = parse_pq(rest)?;
    reject_unknown(&flags, &["--as-printed", "--corrected", "--budget"])?;
    let as_printed = flags.iter().any(|f| f == "--as-printed");
    let corrected = flags.iter().any(|f| f == "--corrected");
    // the mirrored-data verification has no certificate path, so it needs the
    // Jones screen; cover the whole word unless the user pinned a budget
    let mut cfg = budget_config(&flags)?;
    if flag_value(&flags, "--budget")?.is_none() {
        cfg.crossing_budget = cfg.crossing_budget.max(q * (p - 1));
    }

    let parity = matlab_parity(p, q)
        .map_err(|_| format!("({p},{q}) is not a knot; parity needs gcd(p,q) = 1"))?;
    let plan = minimal_ucd(p, q).map_err(|e| e.to_string())?;
    println!("MUKD1 (program order): {:?}", parity.mukd1);
    let mut as_set: Vec<usize> = parity.mukd1_set().into_iter().collect();
    as_set.sort_unstable();
    println!("MUKD1 as a set:        {as_set:?}");
    println!("matches minimal data:  {}", as_set.as_slice() == plan.positions.as_slice());
    if as_printed || !corrected {
        println!("MUKD2 --as-printed ((p-1)(q-1)/2 + 1 - W): {:?}", parity.mukd2_as_printed);
        println!("  in range 1..={}: {}", q * (p - 1), parity.as_printed_in_range());
    }
    if corrected || !as_printed {
        println!("MUKD2 --corrected ((p-1)q + 1 - W): {:?}", parity.mukd2_corrected);
        println!("  in range 1..={}: {}", q * (p - 1), parity.corrected_in_range());
        let verdict = verify_plan_mirrored(&plan, &cfg);
        println!("  verification on the reversed braid:");
        print_verdict(&verdict);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(rest: &[&String]) -> Result<ExitCode, String> {
    let (p, q, flags) = parse_pq(rest)?;
    reject_unknown(&flags, &["--highlight", "-o"])?;
    let highlight_kind = flag_value(&flags, "--highlight")?.unwrap_or_else(|| "none".into());
    let word = BraidWord::toric(p, q).map_err(|e| e.to_string())?;
    let highlight: BTreeSet<usize> = match highlight_kind.as_str() {
        "minimal" => minimal_ucd(p, q)
            .map_err(|e| e.to_string())?
            .positions
            .as_slice()
            .iter()
            .copied()
            .collect(),
        "procedure" => u_crossing_data(p, q)
            .map_err(|e| e.to_string())?
            .as_slice()
            .iter()
            .copied()
            .collect(),
        "none" => BTreeSet::new(),
        other => return Err(format!("unknown highlight {other:?}")),
    };
    let svg = render_braid_svg(&word, &highlight);
    match flag_value(&flags, "-o")? {
        Some(path) => {
            std::fs::write(&path, svg).map_err(|e| format!("{path}: {e}"))?;
            println!("wrote {path}");
        }
        None => print!("{svg}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(rest: &[&String]) -> Result<ExitCode, String> {
    let flags: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
    reject_unknown(&flags, &["--pmax", "--qmax", "--budget"])?;
    let pmax: usize = flag_value(&flags, "--pmax")?
        .ok_or("missing --pmax")?
        .parse()
        .map_err(|_| "bad --pmax".to_string())?;
    let qmax: usize = flag_value(&flags, "--qmax")?
        .ok_or("missing --qmax")?
        .parse()
        .map_err(|_| "bad --qmax".to_string())?;
    let cfg = budget_config(&flags)?;
    println!("p,q,d,unknotting_number,ucd_count,minimal_count,verdict");
    for p in 2..=pmax {
        for q in 1..=qmax {
            let plan = minimal_ucd(p, q).map_err(|e| e.to_string())?;
            let ucd = u_crossing_data(p, q).map_err(|e| e.to_string())?;
            let verdict = verify_plan(&plan, &cfg);
            println!(
                "{p},{q},{},{},{},{},{}",
                plan.params.d,
                unknotting_number(p, q),
                ucd.len(),
                plan.positions.len(),
                verdict.status
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
