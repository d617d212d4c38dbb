//! One function per subcommand, each producing a [`Report`].

use bsdh_core::bsdh::{self, Basis};
use bsdh_core::verify::{self, Scope, SuiteReport};
use bsdh_core::weyl;
use bsdh_core::{DynkinType, Family, RootSystem, Word};
use serde_json::json;

use crate::error::CliError;
use crate::fixtures;
use crate::report::{join, yes_no, Report, Verdict};

/// Word sweeps are exhaustive by default when the group has at most this
/// many reduced words in total (every type of rank <= 4 except `F4`).
pub const EXHAUSTIVE_WORD_BUDGET: u128 = 200_000;
/// Sample size for sweeps over the budget.
pub const DEFAULT_SAMPLE: usize = 1000;

/// Resolves `--type A --rank 3` or `--type A3`.
pub fn resolve_type(ty: &str, rank: Option<usize>) -> Result<DynkinType, CliError> {
    let ty = ty.trim();
    let split = ty.char_indices().nth(1).map(|(k, _)| k).unwrap_or(ty.len());
    let (letter, digits) = ty.split_at(split);
    let family: Family = letter.parse().map_err(CliError::Usage)?;
    let embedded = if digits.is_empty() {
        None
    } else {
        Some(
            digits
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid type {ty:?}")))?,
        )
    };
    let rank = match (embedded, rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Usage(format!(
                "type {ty} conflicts with --rank {b}"
            )))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(CliError::Usage(format!("type {ty} needs --rank"))),
    };
    Ok(DynkinType::new(family, rank)?)
}

fn show(v: &[i64]) -> String {
    if v.is_empty() {
        "(empty)".into()
    } else {
        join(v)
    }
}

fn word_input(rs: &RootSystem, word: &Word) -> serde_json::Value {
    json!({ "type": rs.dynkin_type().to_string(), "word": word.letters() })
}

pub fn coeffs(rs: &RootSystem, word: &Word, basis: Option<Basis>) -> Result<Report, CliError> {
    let mut input = word_input(rs, word);
    input["basis"] = json!(match basis {
        None => "both",
        Some(Basis::O) => "o",
        Some(Basis::X) => "x",
    });
    let mut report = Report::new("coeffs", input);
    let m = bsdh::anticanonical_o_coeffs(rs, word)?;
    let x = bsdh::anticanonical_x_coeffs(rs, word)?;
    report.line(format!("{} word ({})", rs.dynkin_type(), word));
    let mut result = serde_json::Map::new();
    if basis != Some(Basis::X) {
        report.line(format!("m (O basis) = {}", show(m.coeffs())));
        result.insert("m".into(), json!(m.coeffs()));
    }
    if basis != Some(Basis::O) {
        report.line(format!("X basis     = {}", show(x.coeffs())));
        result.insert("x".into(), json!(x.coeffs()));
    }
    if let Some(j) = m.coeffs().iter().position(|&c| c < 0) {
        report.line(format!("first negative coefficient at position {}", j + 1));
    }
    report.result = result.into();
    Ok(report)
}

pub fn classify(rs: &RootSystem, word: &Word) -> Result<Report, CliError> {
    let mut report = Report::new("classify", word_input(rs, word));
    let c = bsdh::classify(rs, word)?;
    report.line(format!("{} word ({})", rs.dynkin_type(), word));
    report.line(format!("m = {}", show(c.m.coeffs())));
    if word.is_empty() {
        report
            .verdicts
            .push(Verdict::info("point", "Fano (convention)"));
    }
    report.verdicts.extend([
        Verdict::info("globally generated", yes_no(c.globally_generated)),
        Verdict::info("Fano", yes_no(c.fano)),
        Verdict::info("very ample", yes_no(c.very_ample)),
        Verdict::info("weak Fano (certified)", yes_no(c.weak_fano_certified)),
        Verdict::info("big", yes_no(c.big)),
    ]);
    report.result = json!({
        "m": c.m.coeffs(),
        "globally_generated": c.globally_generated,
        "very_ample": c.very_ample,
        "fano": c.fano,
        "weak_fano_certified": c.weak_fano_certified,
        "big": c.big,
    });
    Ok(report)
}

pub fn words(
    rs: &RootSystem,
    word: Option<&Word>,
    classes: bool,
    count_only: bool,
) -> Result<Report, CliError> {
    let w = match word {
        Some(word) => weyl::element_of(rs, word)?,
        None => weyl::longest_element(rs),
    };
    let mut input = json!({
        "type": rs.dynkin_type().to_string(),
        "element": w.canonical_word().letters(),
        "classes": classes,
    });
    if word.is_none() {
        input["longest"] = json!(true);
    }
    let mut report = Report::new("words", input);
    report.line(format!(
        "{} element {} (length {})",
        rs.dynkin_type(),
        w,
        w.length()
    ));
    let mut result = serde_json::Map::new();
    if count_only && !classes {
        let n = weyl::count_reduced_words(rs, &w);
        report.line(format!("reduced words: {n}"));
        result.insert("count".into(), json!(n.to_string()));
    } else {
        let all = weyl::all_reduced_words(rs, &w);
        report.line(format!("reduced words: {}", all.len()));
        result.insert("count".into(), json!(all.len().to_string()));
        if classes {
            let cls = weyl::commutation_classes(rs, &all)?;
            report.line(format!("commutation classes: {}", cls.len()));
            result.insert("num_classes".into(), json!(cls.len()));
            if !count_only {
                for (k, class) in cls.iter().enumerate() {
                    report.line(format!("class {}: {} words", k + 1, class.len()));
                    for x in class {
                        report.line(format!("  {x}"));
                    }
                }
                let as_lists: Vec<Vec<&[usize]>> = cls
                    .iter()
                    .map(|c| c.iter().map(Word::letters).collect())
                    .collect();
                result.insert("classes".into(), json!(as_lists));
            }
        } else if !count_only {
            for x in &all {
                report.line(format!("  {x}"));
            }
            let lists: Vec<&[usize]> = all.iter().map(Word::letters).collect();
            result.insert("words".into(), json!(lists));
        }
    }
    report.result = result.into();
    Ok(report)
}

pub fn census(rs: &RootSystem) -> Result<Report, CliError> {
    let mut report = Report::new("census", json!({ "type": rs.dynkin_type().to_string() }));
    let census = bsdh::coxeter_census(rs)?;
    report.line(format!(
        "{}: Coxeter elements c with c^-1(alpha_1 + ... + alpha_n) = -alpha_i",
        rs.dynkin_type()
    ));
    let mut rows = Vec::new();
    for (&i, entry) in &census {
        let length = if rs.dynkin_type().is_simply_laced() {
            ""
        } else if rs.is_short(i) {
            " (short)"
        } else {
            " (long)"
        };
        match entry {
            Some(e) => {
                report.line(format!(
                    "alpha_{i}{length} -> {} [word {}]",
                    e.element, e.word
                ));
                rows.push(json!({ "index": i, "element": e.element.to_string(), "word": e.word.letters() }));
            }
            None => {
                report.line(format!("alpha_{i}{length} -> none"));
                rows.push(json!({ "index": i, "element": null, "word": null }));
            }
        }
    }
    let j1: Vec<usize> = bsdh::j1(rs).into_iter().collect();
    report.line(format!("J_1 = {{{}}}", join(&j1)));
    let found = census.values().filter(|e| e.is_some()).count();
    report.verdicts.push(Verdict::info(
        "entries",
        format!("{found} of {}", rs.rank()),
    ));
    report.result = json!({ "entries": rows, "j1": j1 });
    Ok(report)
}

pub fn character(rs: &RootSystem, word: &Word) -> Result<Report, CliError> {
    let mut report = Report::new("character", word_input(rs, word));
    let chi = bsdh::anticanonical_character(rs, word)?;
    let lw = bsdh::character_lowest_weight_report(rs, word)?;
    report.line(format!("{} word ({})", rs.dynkin_type(), word));
    report.line(format!(
        "dimension {}, {} distinct weights (fundamental-weight coordinates)",
        lw.dimension, lw.num_weights
    ));
    let mut weights = Vec::new();
    for (nu, mult) in chi.terms() {
        report.line(format!("  {nu}  x{mult}"));
        weights.push(json!({ "weight": nu.coords(), "multiplicity": mult }));
    }
    let cert = if lw.certified {
        "H0 (all multiplicities >= 0)"
    } else {
        "euler-only"
    };
    report.verdicts.push(Verdict::info("certification", cert));
    report.verdicts.push(Verdict::info(
        "lowest weight w.0",
        format!(
            "{} with multiplicity {}",
            lw.lowest_weight, lw.lowest_multiplicity
        ),
    ));
    report.verdicts.push(Verdict::info(
        "weights not above w.0",
        lw.below_lowest.len().to_string(),
    ));
    if lw.certified {
        report.verdicts.push(Verdict::check(
            "lowest-weight check",
            yes_no(lw.passed),
            lw.passed,
        ));
    } else {
        report.verdicts.push(Verdict::info(
            "lowest-weight check",
            "not applicable (euler-only)",
        ));
    }
    report.result = json!({
        "dimension": lw.dimension,
        "weights": weights,
        "certified": lw.certified,
        "lowest_weight": lw.lowest_weight.coords(),
        "lowest_multiplicity": lw.lowest_multiplicity,
        "below_lowest": lw.below_lowest.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
        "negative": lw.negative.iter().map(|(w, m)| json!({"weight": w.coords(), "multiplicity": m})).collect::<Vec<_>>(),
        "passed": lw.passed,
    });
    Ok(report)
}

/// Runs the fixture corpus; every row becomes one checked verdict.
pub fn fixtures(text: &str, origin: &str) -> Result<Report, CliError> {
    let mut report = Report::new("fixtures", json!({ "file": origin }));
    let rows = fixtures::parse(text)?;
    let mut results = Vec::new();
    for row in &rows {
        let r = fixtures::check(row)?;
        let value = if r.passed() {
            format!("{} ({}) m = {}", r.dynkin_type, r.word, join(&r.m))
        } else {
            r.mismatches.join("; ")
        };
        report
            .verdicts
            .push(Verdict::check(&r.name, value, r.passed()));
        results.push(r);
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    report.line(format!("{passed} of {} fixtures match", results.len()));
    report.result = json!(results);
    Ok(report)
}

/// A verification target: a type and, for the minuscule sweep, an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Target {
    pub ty: DynkinType,
    pub minuscule: Option<usize>,
}

/// Parses `A3`, `B3:3`, ... separated by commas.
pub fn parse_targets(list: &str) -> Result<Vec<Target>, CliError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (ty, m) = match item.split_once(':') {
                Some((t, m)) => (
                    t,
                    Some(m.trim().parse::<usize>().map_err(|_| {
                        CliError::Usage(format!("invalid minuscule index in {item:?}"))
                    })?),
                ),
                None => (item, None),
            };
            Ok(Target {
                ty: resolve_type(ty, None)?,
                minuscule: m,
            })
        })
        .collect()
}

/// All types of rank `<= max_rank`, in a fixed order.
pub fn default_targets(max_rank: usize) -> Vec<Target> {
    let mut out = Vec::new();
    let families = [
        (Family::A, 1),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::E, 6),
        (Family::F, 4),
        (Family::G, 2),
    ];
    for (family, lo) in families {
        for rank in lo..=max_rank {
            if let Ok(ty) = DynkinType::new(family, rank) {
                out.push(Target {
                    ty,
                    minuscule: None,
                });
            }
        }
    }
    out
}

pub const SUITES: [&str; 9] = [
    "oracle-m",
    "thm56",
    "thm58",
    "cor54",
    "census",
    "j1",
    "character",
    "structural",
    "fixtures",
];

/// Options shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub exhaustive: bool,
    pub sample: Option<usize>,
    pub seed: u64,
}

impl SweepOptions {
    fn scope(&self, rs: &RootSystem) -> Scope {
        match (self.exhaustive, self.sample) {
            (true, _) => Scope::Exhaustive,
            (false, Some(count)) => Scope::Sampled {
                count,
                seed: self.seed,
            },
            (false, None) if verify::total_reduced_words(rs) <= EXHAUSTIVE_WORD_BUDGET => {
                Scope::Exhaustive
            }
            (false, None) => Scope::Sampled {
                count: DEFAULT_SAMPLE,
                seed: self.seed,
            },
        }
    }
}

/// Runs one suite over the targets. Targets outside a suite's hypotheses
/// are skipped with a note rather than failing.
fn run_suite(
    suite: &str,
    targets: &[Target],
    opts: SweepOptions,
    report: &mut Report,
) -> Result<Vec<SuiteReport>, CliError> {
    let mut out = Vec::new();
    for t in targets {
        let rs = RootSystem::new(t.ty);
        let n = rs.rank();
        let skip = |report: &mut Report, why: &str| {
            report.line(format!("{suite} {}: skipped ({why})", t.ty));
        };
        match suite {
            "oracle-m" => out.push(verify::oracle_m(&rs, opts.scope(&rs))?),
            "structural" => out.push(verify::structural(&rs, opts.scope(&rs), opts.seed)?),
            "thm56" if t.ty.to_string() == "A2" => skip(report, "type A2 is excluded"),
            "thm56" => out.push(verify::fano_all_words(&rs)?),
            "thm58" => {
                let indices = match t.minuscule {
                    Some(m) => vec![m],
                    None => rs.minuscule_weights(),
                };
                if indices.is_empty() {
                    skip(report, "no minuscule weights");
                }
                for m in indices {
                    out.push(verify::minuscule_gg(&rs, m)?);
                }
            }
            "cor54" => out.push(verify::coxeter_gg(&rs)?),
            "census" | "j1" if n < 2 => skip(report, "rank 1"),
            "census" => out.push(verify::census(&rs)?),
            "j1" => out.push(verify::j1_cardinality(&rs)?),
            "character" => out.push(verify::character(&rs)?),
            other => return Err(CliError::Usage(format!("unknown suite {other:?}"))),
        }
    }
    Ok(out)
}

pub fn verify(suite: &str, targets: &[Target], opts: SweepOptions) -> Result<Report, CliError> {
    let input = json!({
        "suite": suite,
        "types": targets
            .iter()
            .map(|t| match t.minuscule {
                Some(m) => format!("{}:{m}", t.ty),
                None => t.ty.to_string(),
            })
            .collect::<Vec<_>>(),
        "exhaustive": opts.exhaustive,
        "sample": opts.sample,
        "seed": opts.seed,
    });
    let suites: Vec<&str> = match suite {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    let mut report = Report::new("verify", input);
    let mut results = Vec::new();
    for s in suites {
        if s == "fixtures" {
            let sub = fixtures(fixtures::EMBEDDED, "embedded")?;
            let bad = sub
                .verdicts
                .iter()
                .filter(|v| v.pass == Some(false))
                .count();
            report.line(format!(
                "fixtures: {} checked, {bad} violations",
                sub.verdicts.len()
            ));
            report.verdicts.push(Verdict::check(
                "fixtures",
                format!("{} checked, {bad} violations", sub.verdicts.len()),
                bad == 0,
            ));
            results.push(json!({ "suite": "fixtures", "rows": sub.result }));
            continue;
        }
        for r in run_suite(s, targets, opts, &mut report)? {
            report.line(format!(
                "{} {}: {} checked, {} violations",
                r.suite,
                r.target,
                r.checked,
                r.violations.len()
            ));
            for note in &r.notes {
                report.line(format!("  note: {note}"));
            }
            for v in &r.violations {
                report.line(format!("  violation: {v}"));
            }
            report.verdicts.push(Verdict::check(
                format!("{} {}", r.suite, r.target),
                format!("{} checked, {} violations", r.checked, r.violations.len()),
                r.passed(),
            ));
            results.push(serde_json::to_value(&r).expect("suite report serializes"));
        }
    }
    report.result = json!(results);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_resolution() {
        assert_eq!(resolve_type("A", Some(3)).unwrap().to_string(), "A3");
        assert_eq!(resolve_type("d4", None).unwrap().to_string(), "D4");
        assert_eq!(resolve_type("A3", Some(3)).unwrap().to_string(), "A3");
        assert!(matches!(
            resolve_type("A3", Some(4)),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(resolve_type("A", None), Err(CliError::Usage(_))));
        assert!(matches!(
            resolve_type("Q", Some(2)),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            resolve_type("E", Some(5)),
            Err(CliError::Domain(_))
        ));
    }

    #[test]
    fn target_lists() {
        let t = parse_targets("A4:2,D4:4,B3").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].minuscule, Some(2));
        assert_eq!(t[2].minuscule, None);
        assert!(parse_targets("A4:x").is_err());
        let names: Vec<String> = default_targets(3)
            .iter()
            .map(|t| t.ty.to_string())
            .collect();
        assert_eq!(names, ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]);
    }

    #[test]
    fn empty_word_is_a_point() {
        let rs = RootSystem::new("A3".parse().unwrap());
        let r = classify(&rs, &Word::empty()).unwrap();
        assert!(r.render_text().contains("point: Fano (convention)"));
    }
}
