//! One function per subcommand; each returns a report and an exit status.

use std::collections::BTreeMap;
use std::path::Path;

use sumset_atoms::classify::{
    check_corollary_bound, classification_kv, classify, classify_example, Case, ClassificationResult,
};
use sumset_atoms::example::{build_example_capped, sophie_germain_scan, verdict_kv, verify_example};
use sumset_atoms::gtf::dump_group_table;
use sumset_atoms::oracle::oracle_atoms_capped;
use sumset_atoms::par::with_workers;
use sumset_atoms::report::{fragment_report_kv, set_token, KvReport};
use sumset_atoms::sumset::{find_atoms_with, normalize, AtomOptions};
use sumset_atoms::verify::{run_sweep, SweepConfig};
use sumset_atoms::{ClassifyError, Exec, FiniteGroup, GroupSubset, SumsetError};

use crate::source::{self, SourceError};
use crate::{code, Cli, Command, Global, GroupSource};

pub struct Outcome {
    pub report: KvReport,
    pub code: u8,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: code::INPUT, message: message.into() }
    }
}

impl From<SourceError> for Failure {
    fn from(e: SourceError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<SumsetError> for Failure {
    fn from(e: SumsetError) -> Self {
        let code = match e {
            SumsetError::NotSeparable { .. } | SumsetError::NotGenerating => code::PRECONDITION,
            _ => code::INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Sumset(e) => e.into(),
            ClassifyError::SetTooSmall => Failure { code: code::PRECONDITION, message: e.to_string() },
            ClassifyError::Group(e) => Failure::input(e.to_string()),
        }
    }
}

fn header(command: &str, global: &Global) -> KvReport {
    let mut kv = KvReport::new();
    kv.push("command", command).push("seed", global.seed);
    kv
}

fn workers(global: &Global) -> usize {
    match global.workers {
        Some(n) => n as usize,
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let global = &cli.global;
    with_workers(workers(global), || match &cli.command {
        Command::Group { source, dump } => group(global, source, dump.as_deref()),
        Command::Atoms { source, set, k, oracle } => atoms(global, source, set, *k, *oracle),
        Command::Classify { source, set, example } => classify_cmd(global, source, set.as_deref(), *example),
        Command::Verify { suite, max_order, family, limit, samples, sample_order, theorem_order } => {
            let defaults = SweepConfig::for_suite(*suite);
            let cfg = SweepConfig {
                max_order: max_order.unwrap_or(defaults.max_order),
                family: family.unwrap_or(defaults.family),
                limit: limit.unwrap_or(defaults.limit),
                seed: global.seed,
                samples: samples.unwrap_or(defaults.samples),
                sample_order: sample_order.unwrap_or(defaults.sample_order),
                theorem_order: theorem_order.unwrap_or(defaults.theorem_order),
                exec: Exec::Parallel,
            };
            verify(*suite, &cfg)
        }
        Command::Example { p, q, dump_table } => example(global, *p, *q, dump_table.as_deref()),
        Command::Scan { limit } => scan(global, *limit),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn group(global: &Global, src: &GroupSource, dump: Option<&Path>) -> Result<Outcome, Failure> {
    let g = source::load(src, global.max_group_order)?;
    g.validate().map_err(|e| Failure::input(e.to_string()))?;
    let subgroups = g.subgroups();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for h in &subgroups {
        *by_order.entry(h.len()).or_default() += 1;
    }
    let mut kv = header("group", global);
    kv.push("group", source::describe(src))
        .push("order", g.order())
        .push("valid", true)
        .push("abelian", g.is_abelian())
        .push("center", g.center().len())
        .push("subgroups", subgroups.len());
    for (order, count) in by_order {
        kv.push(format!("subgroups.order.{order}"), count);
    }
    if let Some(path) = dump {
        write_file(path, &dump_group_table(&g))?;
        kv.push("dump", path.display());
    }
    Ok(Outcome { report: kv, code: code::OK })
}

fn parse_set(g: &FiniteGroup, text: &str) -> Result<GroupSubset, Failure> {
    let s = GroupSubset::parse_literal(g.order(), text).map_err(|e| Failure::input(format!("--set: {e}")))?;
    if s.is_empty() {
        return Err(Failure::input("--set: subset is empty"));
    }
    Ok(s)
}

fn atoms(global: &Global, src: &GroupSource, set: &str, k: usize, oracle: bool) -> Result<Outcome, Failure> {
    if k == 0 {
        return Err(Failure::input("--k must be positive"));
    }
    let g = source::load(src, global.max_group_order)?;
    let s = parse_set(&g, set)?;
    // Atoms are invariant under right translation of S; search on S ∋ 1.
    let norm = normalize(&g, &s)?;
    let opts = AtomOptions { exec: Exec::Parallel, atom_cap: global.atom_cap, ..AtomOptions::default() };
    let report = find_atoms_with(&g, &norm.set, k, &opts)?;
    let mut kv = header("atoms", global);
    kv.push("group", source::describe(src))
        .push("order", g.order())
        .push("set", set_token(&s))
        .push("shift", norm.shift)
        .push("normalized", set_token(&norm.set))
        .append("search", &fragment_report_kv(&report));
    let mut exit = code::OK;
    if oracle {
        let o = oracle_atoms_capped(&g, &norm.set, k, global.oracle_cap, global.atom_cap)?;
        let counts_agree = !(report.fragment_count_exact && o.fragment_count_exact)
            || report.fragment_count == o.fragment_count;
        let agree = report.same_result(&o) && counts_agree;
        kv.append("oracle", &fragment_report_kv(&o)).push("oracle.agree", agree);
        if !agree {
            exit = code::ORACLE_MISMATCH;
        }
    }
    Ok(Outcome { report: kv, code: exit })
}

fn case_code(r: &ClassificationResult) -> u8 {
    if r.case == Case::Violation {
        code::VIOLATION
    } else {
        code::OK
    }
}

fn classify_cmd(global: &Global, src: &GroupSource, set: Option<&str>, example: bool) -> Result<Outcome, Failure> {
    let mut kv = header("classify", global);
    kv.push("group", source::describe(src));
    if example {
        let pq = src.semidirect.as_deref().unwrap_or_default();
        let inst = build_example_capped(pq[0], pq[1], global.max_group_order)
            .map_err(|e| Failure::input(e.to_string()))?;
        let r = classify_example(&inst)?;
        kv.append("classification", &classification_kv(&inst.group, &inst.s, &r))
            .push_checks("corollary", &check_corollary_bound(&inst.group, &inst.s, &r));
        return Ok(Outcome { code: case_code(&r), report: kv });
    }
    let g = source::load(src, global.max_group_order)?;
    let s = parse_set(&g, set.unwrap_or_default())?;
    let r = classify(&g, &s)?;
    kv.append("classification", &classification_kv(&g, &s, &r));
    Ok(Outcome { code: case_code(&r), report: kv })
}

fn verify(suite: sumset_atoms::verify::Suite, cfg: &SweepConfig) -> Result<Outcome, Failure> {
    let r = run_sweep(suite, cfg).map_err(|e| Failure::input(e.to_string()))?;
    let mut kv = KvReport::new();
    kv.push("command", "verify");
    for (k, v) in r.kv.entries() {
        kv.push(k.clone(), v);
    }
    let exit = if r.pass() { code::OK } else { code::VIOLATION };
    Ok(Outcome { report: kv, code: exit })
}

fn example(global: &Global, p: usize, q: usize, dump: Option<&Path>) -> Result<Outcome, Failure> {
    let inst = build_example_capped(p, q, global.max_group_order).map_err(|e| Failure::input(e.to_string()))?;
    let verdict = verify_example(&inst);
    let r = classify_example(&inst)?;
    let mut kv = header("example", global);
    kv.push("order", inst.group.order())
        .push("H", set_token(&inst.h))
        .push("a", inst.a)
        .push("S.size", inst.s.len())
        .append("verdict", &verdict_kv(&verdict))
        .append("classification", &classification_kv(&inst.group, &inst.s, &r))
        .push_checks("corollary", &check_corollary_bound(&inst.group, &inst.s, &r));
    if let Some(path) = dump {
        write_file(path, &dump_group_table(&inst.group))?;
        kv.push("dump", path.display());
    }
    Ok(Outcome { code: case_code(&r), report: kv })
}

fn scan(global: &Global, limit: usize) -> Result<Outcome, Failure> {
    let rows = sophie_germain_scan(limit).map_err(|e| Failure::input(e.to_string()))?;
    let mut kv = header("scan", global);
    kv.push("limit", limit).push("rows", rows.len());
    for (i, r) in rows.iter().enumerate() {
        kv.push(format!("row.{i}"), format!("p={} q={} order={} |S|={} deficit/sqrt={:.4}", r.p, r.q, r.order, r.s_len, r.ratio));
    }
    Ok(Outcome { report: kv, code: code::OK })
}
