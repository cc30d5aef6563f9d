use std::process::{Command, Output};

fn schubfact(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubfact")).args(args.split_whitespace()).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn wset_listing() {
    let o = schubfact("wset --mu 4,2 --family orthogonal");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "465321 563421 643521\n");
}

#[test]
fn wset_json_and_dot() {
    let o = schubfact("wset --mu 2,4 --family sp --format json");
    assert_eq!(stdout(&o), "{\"family\":\"symplectic\",\"mu\":[2,4],\"members\":[[5,6,1,3,4,2],[5,6,3,1,2,4]]}\n");
    let o = schubfact("wset --mu 1,1 --dot");
    assert_eq!(stdout(&o), "graph wset {\n  label=\"orthogonal (1,1)\";\n  \"21\";\n}\n");
}

#[test]
fn schubert_polynomial() {
    let o = schubfact("schubert --n 3 --perm 321");
    assert_eq!(stdout(&o), "x1^2 x2\n");
    let o = schubfact("schubert --n 4 --perm 321");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_with_json_report() {
    let o = schubfact("verify --mu 3,4 --family orthogonal --format json");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.starts_with("{\"family\":\"orthogonal\",\"mu\":[3,4],\"verdict\":\"pass\",\"degree\":18,\"support\":6")
    );
    assert!(!text.contains("\"ms\""));
}

#[test]
fn json_output_is_deterministic() {
    for args in
        ["verify --mu 2,4 --family sp --format json", "sweep --n 5 --format json", "expand --mu 3,4 --format json"]
    {
        let a = stdout(&schubfact(args));
        let b = stdout(&schubfact(args));
        assert_eq!(a, b, "{args}");
    }
}

#[test]
fn timing_is_opt_in() {
    let o = schubfact("verify --mu 2 --format json --timing");
    assert!(stdout(&o).contains("\"ms\":"));
}

#[test]
fn formula_factored_and_expanded() {
    let o = schubfact("formula --mu 3,4");
    assert_eq!(stdout(&o), "x1^5 x2^4 x3^4 x4 x5 (x1 + x2)(x4 + x5)(x4 + x6)\n");
    let o = schubfact("formula --mu 4 --family symplectic --expand");
    assert_eq!(stdout(&o), "x2 x3 + x1 x3 + x1 x2 + x1^2\n");
}

#[test]
fn equivariant_class_and_checks() {
    let o = schubfact("equivariant --mu 2");
    assert_eq!(stdout(&o), "2 (x1 - z1)\n");
    let o = schubfact("equivariant --mu 2,2 --check --format json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"support\":24"));
    let o = schubfact("equivariant --mu 3,4 --check");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn expand_both_inputs() {
    let o = schubfact("expand --mu 2,4 --family symplectic");
    assert_eq!(stdout(&o), "1 S_561342\n1 S_563124\n");
    let o = schubfact("expand --poly (x1+x2)*(x1+x3) --n 4");
    assert_eq!(stdout(&o), "1 S_1342\n1 S_3124\n");
    let o = schubfact("expand --poly x2 --n 2");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_counts() {
    let o = schubfact("sweep --n 4 --family symplectic");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "symplectic (2,2): pass\nsymplectic (4): pass\n2 of 2 passed\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "verify --mu 3,1 --family symplectic",
        "verify --mu 10",
        "verify --mu 4 --max-n 3",
        "verify --mu 0,2",
        "verify --mu 2 --family unitary",
        "verify --bogus",
        "frobnicate",
    ] {
        let o = schubfact(args);
        assert_eq!(o.status.code(), Some(2), "{args}");
        assert!(!o.stderr.is_empty(), "{args}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let o = schubfact("--help");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sweep"));
}
