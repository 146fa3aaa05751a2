use std::io::Write;
use std::process::{Command, Output};

fn sumset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value(o: &Output, key: &str) -> Option<String> {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
}

fn machine(args: &[&str]) -> Output {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    sumset(&all)
}

#[test]
fn group_census() {
    let o = machine(&["group", "--cyclic", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "order").as_deref(), Some("6"));
    assert_eq!(value(&o, "subgroups").as_deref(), Some("4"));
    let o = machine(&["group", "--semidirect", "7", "3"]);
    assert_eq!(value(&o, "order").as_deref(), Some("21"));
    assert_eq!(value(&o, "abelian").as_deref(), Some("false"));
}

#[test]
fn bad_table_is_an_input_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // Not associative: a Latin square with identity 0 of order 5 that is no group.
    writeln!(f, "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0").unwrap();
    let o = sumset(&["group", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("associativity"));
    assert!(o.stdout.is_empty());
}

#[test]
fn table_dump_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d4.gtf");
    let p = path.to_str().unwrap();
    let o = sumset(&["group", "--dihedral", "4", "--dump", p]);
    assert_eq!(o.status.code(), Some(0));
    let a = machine(&["group", "--dihedral", "4"]);
    let b = machine(&["group", "--file", p]);
    for key in ["order", "abelian", "center", "subgroups", "subgroups.order.2"] {
        assert_eq!(value(&a, key), value(&b, key), "{key}");
    }
}

#[test]
fn atoms_with_oracle() {
    let o = machine(&["atoms", "--cyclic", "7", "--set", "0 1 2", "--k", "2", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "search.kappa").as_deref(), Some("2"));
    assert_eq!(value(&o, "search.atoms[0]").as_deref(), Some("0 1"));
    assert_eq!(value(&o, "oracle.agree").as_deref(), Some("true"));
    let o = machine(&["atoms", "--cyclic", "6", "--set", "0 2 3", "--k", "2"]);
    assert_eq!(value(&o, "search.atoms[0]").as_deref(), Some("0 3"));
}

#[test]
fn atoms_translate_sets_without_identity() {
    let a = machine(&["atoms", "--cyclic", "7", "--set", "3 4 5", "--k", "2"]);
    let b = machine(&["atoms", "--cyclic", "7", "--set", "0 1 2", "--k", "2"]);
    assert_eq!(value(&a, "shift").as_deref(), Some("3"));
    assert_eq!(value(&a, "search.atoms[0]"), value(&b, "search.atoms[0]"));
}

#[test]
fn atoms_errors() {
    let o = sumset(&["atoms", "--cyclic", "5", "--set", "0 1 2 3 4", "--k", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = sumset(&["atoms", "--cyclic", "5", "--set", "0 9", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = sumset(&["atoms", "--cyclic", "30", "--set", "0 1", "--k", "1", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_cases() {
    let o = machine(&["classify", "--cyclic", "7", "--set", "0 1 2"]);
    assert_eq!(value(&o, "classification.case").as_deref(), Some("CASE_I"));
    let o = machine(&["classify", "--cyclic", "6", "--set", "0 2 3"]);
    assert_eq!(value(&o, "classification.case").as_deref(), Some("CASE_II"));
    let o = machine(&["classify", "--semidirect", "7", "3", "--example"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "classification.case").as_deref(), Some("CASE_III"));
    assert!(value(&o, "corollary.1").unwrap().ends_with("pass"));
}

#[test]
fn examples() {
    let o = machine(&["example", "11", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "verdict.passed").as_deref(), Some("8/8"));
    assert_eq!(value(&o, "classification.case").as_deref(), Some("CASE_III"));
    let o = machine(&["example", "7", "3"]);
    assert_eq!(value(&o, "classification.case").as_deref(), Some("CASE_III"));
    assert_eq!(value(&o, "verdict.check.6").as_deref(), Some("fail"));
    let o = sumset(&["example", "5", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let o = machine(&["verify", "main-theorem", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "failures").as_deref(), Some("0"));
    assert_eq!(value(&o, "total.violation"), None);
    let o = machine(&["verify", "mann", "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let o = machine(&["verify", "two-coset", "--family", "sophie-germain", "--limit", "25"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&o, "instances").as_deref(), Some("3"));
    let o = sumset(&["verify", "nonsense"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reports_do_not_depend_on_workers() {
    let args = ["verify", "intersection", "--max-order", "8", "--samples", "20", "--seed", "7"];
    let one = machine(&[&args[..], &["--workers", "1"]].concat());
    let four = machine(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(value(&one, "seed").as_deref(), Some("7"));
}

#[test]
fn usage_errors() {
    assert_eq!(sumset(&["group"]).status.code(), Some(1));
    assert_eq!(sumset(&["group", "--cyclic", "4", "--dihedral", "4"]).status.code(), Some(1));
    assert_eq!(sumset(&["--workers", "0", "scan"]).status.code(), Some(1));
    assert_eq!(sumset(&["--help"]).status.code(), Some(0));
}
