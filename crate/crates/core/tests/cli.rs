use std::path::PathBuf;
use std::process::{Command, Output};

fn gtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtc")).args(args).current_dir(env!("CARGO_MANIFEST_DIR")).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let o = gtc(&["check", "--theory", "m-wu", "--file", "conjectures/isosceles.sexp"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "invalid");
    assert!(v["counterexample"]["A.x"].is_string());

    let o = gtc(&["check", "--theory", "m-wu", "--file", "conjectures/perpendicular-exists.sexp", "--pretty"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("Robinson"));

    let o = gtc(&["check", "--theory", "m-wu", "--file", "conjectures/orthogonal-pair.sexp"]);
    assert_eq!(code(&o), 2, "{}", stdout(&o));

    let o = gtc(&["check", "--theory", "m-wu", "--file", "conjectures/altitudes.sexp"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn budget_exhaustion_exits_three() {
    let o = gtc(&["check", "--theory", "p-hilbert", "--file", "conjectures/midpoint-between.sexp", "--budget", "1"]);
    assert_eq!(code(&o), 3, "{}", stdout(&o));
}

#[test]
fn input_errors_exit_four() {
    assert_eq!(code(&gtc(&["check", "--theory", "m-wu", "--file", "no/such/file.sexp"])), 4);
    let bad = scratch("bad.sexp", "(forall ((P Point)) (in P P))");
    assert_eq!(code(&gtc(&["check", "--theory", "m-wu", "--file", bad.to_str().unwrap()])), 4);
    assert_eq!(code(&gtc(&["check", "--theory", "nowhere", "--file", "conjectures/isosceles.sexp"])), 4);
    assert_eq!(code(&gtc(&["roundtrip", "--field", "p=6"])), 4);
    assert_eq!(code(&gtc(&["segment", "mul", "1/2"])), 4);
}

#[test]
fn translate_prints_field_sentence() {
    let f = scratch("par.sexp", "(forall ((l Line) (m Line)) (=> (Par l m) (not (= l m))))");
    let o = gtc(&["translate", "--scheme", "pp-in", "--file", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("l.a"));
    let o = gtc(&["translate", "--scheme", "pp-in", "--file", f.to_str().unwrap(), "--decide", "unordered"]);
    assert_eq!(code(&o), 2, "{}", stdout(&o));
    let g = scratch("or.sexp", "(forall ((l Line) (m Line)) (=> (Or l m) (Or m l)))");
    let o = gtc(&["translate", "--scheme", "pp-wu", "--file", g.to_str().unwrap(), "--decide", "unordered"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn roundtrip_and_segments() {
    let o = gtc(&["roundtrip", "--field", "p=5"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"], 25);
    let o = gtc(&["roundtrip", "--field", "cayley=data/gf4.cayley"]);
    assert_eq!(code(&o), 0);

    let o = gtc(&["segment", "mul", "2/3", "3/4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("product = 1/2"));
    let o = gtc(&["segment", "cmp", "1/3", "1/2"]);
    assert!(stdout(&o).contains("less: a + 1/6 = b"));
}

#[test]
fn axioms_are_exported() {
    let o = gtc(&["axioms", "--theory", "pappus"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Pappus"));
}
