use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

use lra_core::deformation::{check_nijenhuis_element, EquivalenceDatum, LinearDeformation, TruncatedFormalDeformation};
use lra_core::format::{to_json_string, Bundle, CochainFile, DatumFile, DeformationFile, LinearMapFile};
use lra_core::generate::{self, gen_twisted_rb, Profile, TrbStrategy};
use lra_core::twisted_rb::dk_element;
use lra_core::{Cochain, Matrix, Vector};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/v1")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_string_lossy().into_owned()
}

fn lra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lra")).args(args).env_remove("LRA_DEGREE_CAP").output().unwrap()
}

fn lra_stdin(args: &[&str], input: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_lra"))
        .args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("lra-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn abelian_algebra_passes() {
    let o = lra(&["check", "leibniz", "--algebra", &fixture("algebra-abelian-dim2-seed0.json")]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_out(&o)["holds"], json!(true));
}

#[test]
fn seed_42_nijenhuis_operator_passes() {
    let o = lra(&["check", "trb", "--bundle", &fixture("trb-nijenhuis-seed42.json")]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn scalar_representation_of_the_line() {
    let o = lra(&["cohomology", "--bundle", &fixture("rep-trivial-dim1-seed0.json"), "--degree", "2"]);
    assert_eq!(code(&o), 0);
    let d = &json_out(&o)["details"];
    assert_eq!((d["z"].clone(), d["b"].clone(), d["h"].clone()), (json!(1), json!(0), json!(1)));
}

#[test]
fn failed_identity_exits_one_with_witness() {
    let s = Scratch::new("witness");
    let a = s.write("a.json", r#"{"dim": 1, "bracket": [[["1"]]]}"#);
    let o = lra(&["check", "leibniz", "--algebra", &a]);
    assert_eq!(code(&o), 1);
    let f = &json_out(&o)["details"]["first_failure"];
    assert_eq!(f["indices"], json!([0, 0, 0]));
    assert_eq!((f["lhs"].clone(), f["rhs"].clone()), (json!(["1"]), json!(["2"])));
}

#[test]
fn malformed_input_exits_two() {
    let s = Scratch::new("malformed");
    let broken = s.write("broken.json", r#"{"dim": 2"#);
    let shape = s.write("shape.json", r#"{"dim": 2, "bracket": [[["1"]]]}"#);
    let zero_den = s.write("den.json", r#"{"dim": 1, "bracket": [[["1/0"]]]}"#);
    for path in [broken.as_str(), shape.as_str(), zero_den.as_str(), "/no/such/file.json"] {
        let o = lra(&["check", "leibniz", "--algebra", path]);
        assert_eq!(code(&o), 2, "{path}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(code(&lra(&["check", "frobnicate"])), 2);
}

#[test]
fn degree_cap_comes_from_the_environment() {
    let r = fixture("rep-trivial-dim1-seed0.json");
    let capped = Command::new(env!("CARGO_BIN_EXE_lra"))
        .args(["cohomology", "--bundle", &r, "--degree", "2"])
        .env("LRA_DEGREE_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 2);
    assert_eq!(code(&lra(&["cohomology", "--bundle", &r, "--degree", "4"])), 2);
    assert_eq!(code(&lra(&["cohomology", "--bundle", &r, "--degree", "4", "--degree-cap", "4"])), 0);
}

#[test]
fn quiet_prints_nothing() {
    let o = lra(&["--quiet", "check", "trb", "--bundle", &fixture("trb-negative-seed42.json")]);
    assert_eq!(code(&o), 1);
    assert!(o.stdout.is_empty());
}

#[test]
fn timing_is_opt_in() {
    let a = fixture("algebra-dim2-seed42.json");
    assert!(json_out(&lra(&["check", "leibniz", "--algebra", &a])).get("elapsed_ms").is_none());
    assert!(json_out(&lra(&["--timing", "check", "leibniz", "--algebra", &a]))["elapsed_ms"].is_u64());
}

#[test]
fn all_fixtures_meet_expectations() {
    let o = lra(&["check", "--all-fixtures", &fixtures().to_string_lossy()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let list = json_out(&o)["details"]["fixtures"].as_array().unwrap().len();
    assert!(list >= 10);
}

#[test]
fn fixtures_regenerate_byte_identically() {
    let cases: &[(&str, &[&str])] = &[
        ("algebra-dim2-seed42.json", &["gen", "algebra", "--dim-g", "2", "--seed", "42"]),
        ("algebra-abelian-dim2-seed0.json", &["gen", "abelian", "--dim-g", "2", "--seed", "0"]),
        ("trb-nijenhuis-seed42.json", &["gen", "trb", "--strategy", "nijenhuis", "--seed", "42"]),
        ("trb-negative-seed42.json", &["gen", "trb-negative", "--strategy", "nijenhuis", "--seed", "42"]),
        ("deformation-seed42.json", &["gen", "deformation", "--seed", "42"]),
        ("ns-seed42.json", &["gen", "ns", "--strategy", "nijenhuis", "--seed", "42"]),
    ];
    for (file, args) in cases {
        let o = lra(args);
        assert_eq!(code(&o), 0);
        let stored = std::fs::read(fixtures().join(file)).unwrap();
        assert_eq!(o.stdout, stored, "{file}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "--all-fixtures", &fixtures().to_string_lossy()].map(String::from);
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    assert_eq!(lra(&args).stdout, lra(&args).stdout);
}

/// `build` output piped into the matching `check`.
fn round_trip(build: &[&str], check: &[&str]) {
    let b = lra(build);
    assert_eq!(code(&b), 0, "{build:?}: {}", String::from_utf8_lossy(&b.stderr));
    let c = lra_stdin(check, std::str::from_utf8(&b.stdout).unwrap());
    assert_eq!(code(&c), 0, "{check:?}: {}", String::from_utf8_lossy(&c.stdout));
}

#[test]
fn build_outputs_pass_their_checks() {
    let s = Scratch::new("round");
    let nij = fixture("trb-nijenhuis-seed42.json");
    let inv = fixture("trb-invertible-cochain-seed42.json");
    let alg = fixture("algebra-dim3-seed42.json");
    round_trip(&["build", "regular-rep", "--algebra", &alg], &["check", "rep", "--bundle", "-"]);
    round_trip(&["build", "semidirect", "--bundle", &fixture("cocycle-degree2-seed42.json")], &["check", "leibniz", "--algebra", "-"]);
    round_trip(&["build", "induce-bracket", "--bundle", &inv], &["check", "leibniz", "--algebra", "-"]);
    round_trip(&["build", "induce-rep", "--bundle", &inv], &["check", "rep", "--bundle", "-"]);
    round_trip(&["build", "ns-from-trb", "--bundle", &nij], &["check", "ns", "--ns", "-"]);
    round_trip(&["build", "compatible-ns", "--bundle", &inv], &["check", "ns", "--ns", "-"]);
    let ns = s.write("ns.json", std::str::from_utf8(&lra(&["build", "ns-from-trb", "--bundle", &nij]).stdout).unwrap());
    round_trip(&["build", "canonical-trb", "--ns", &ns], &["check", "trb", "--bundle", "-"]);

    let id = s.write("id.json", &to_json_string(&LinearMapFile::from_matrix(&Matrix::scalar(3, &lra_core::int(2)))));
    round_trip(&["build", "deformed", "--algebra", &alg, "--map", &id], &["check", "leibniz", "--algebra", "-"]);
    round_trip(&["build", "ns-from-nijenhuis", "--algebra", &alg, "--map", &id], &["check", "ns", "--ns", "-"]);
    assert_eq!(code(&lra(&["check", "nijenhuis", "--algebra", &alg, "--map", &id])), 0);

    let h = s.write("h.json", r#"{"degree": 1, "values": [["1/2", "0"], ["0", "1/3"]]}"#);
    round_trip(&["build", "shift", "--bundle", &nij, "--cochain", &h], &["check", "trb", "--bundle", "-"]);
}

#[test]
fn gauge_by_a_generated_cocycle() {
    let s = Scratch::new("gauge");
    let p = Profile::new(2, 2);
    let d = gen_twisted_rb(3, &p, TrbStrategy::InvertibleCochain).unwrap();
    let b = generate::gen_admissible_cocycle(&mut generate::rng(3), &d, &p).unwrap();
    let bundle = s.write("d.json", &to_json_string(&Bundle::from_twisted_rb(&d)));
    let c = s.write("b.json", &to_json_string(&CochainFile::from_cochain(&b)));
    round_trip(&["build", "gauge", "--bundle", &bundle, "--cochain", &c], &["check", "trb", "--bundle", "-"]);
    let not_cocycle = s.write("nc.json", &to_json_string(&CochainFile::from_cochain(&Cochain::from_linear_map(&Matrix::identity(2)))));
    let o = lra(&["build", "gauge", "--bundle", &bundle, "--cochain", &not_cocycle]);
    if code(&o) != 0 {
        assert_eq!(code(&o), 1);
        assert_eq!(json_out(&o)["holds"], json!(false));
    }
}

#[test]
fn identity_is_a_morphism_and_graph_check_agrees() {
    let s = Scratch::new("morphism");
    let nij = fixture("trb-nijenhuis-seed42.json");
    let m = s.write("m.json", r#"{"phi": [["1","0"],["0","1"]], "psi": [["1","0"],["0","1"]]}"#);
    assert_eq!(code(&lra(&["check", "morphism", "--src", &nij, "--dst", &nij, "--morphism", &m])), 0);
    assert_eq!(code(&lra(&["check", "graph", "--bundle", &nij])), 0);
    assert_eq!(code(&lra(&["check", "graph", "--bundle", &fixture("trb-negative-seed42.json")])), 1);
}

#[test]
fn deformation_commands() {
    let s = Scratch::new("deform");
    let p = Profile::new(2, 2);
    let d = gen_twisted_rb(42, &p, TrbStrategy::Nijenhuis).unwrap();
    let x = generate::gen_nijenhuis_element(&mut generate::rng(42), &d).unwrap();
    assert!(check_nijenhuis_element(&d, &x).unwrap().holds);
    let dk = dk_element(&d, &x);
    assert!(!dk.is_zero());

    // K_1 = −∂_K(x) trivializes; K_1 and K_1 − ∂_K(x) are equivalent via x.
    let k1 = -&dk;
    let tfd = TruncatedFormalDeformation::new(d.clone(), vec![k1.clone()]).unwrap();
    let def = s.write("def.json", &to_json_string(&DeformationFile::from_formal(&tfd)));
    let elem = s.write("x.json", &serde_json::to_string(&x).unwrap());
    let base = s.write("base.json", &to_json_string(&Bundle::from_twisted_rb(&d)));
    assert_eq!(code(&lra(&["check", "nijenhuis-element", "--bundle", &base, "--element", &elem])), 0);
    assert_eq!(code(&lra(&["deform", "check-linear", "--deformation", &def])), 0);

    let out = lra(&["build", "trivialize", "--deformation", &def, "--element", &elem]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_out(&out);
    for entry in v["terms"][0]["matrix"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()) {
        assert_eq!(entry, &json!("0"));
    }
    let triv = s.write("triv.json", std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(code(&lra(&["deform", "check-formal", "--deformation", &triv, "--order", "3"])), 0);

    let other = LinearDeformation::new(d.clone(), &k1 - &dk).unwrap();
    let other = s.write("other.json", &to_json_string(&DeformationFile::from_linear(&other)));
    let datum = s.write("e.json", &to_json_string(&DatumFile::from_datum(&EquivalenceDatum::linear(x.clone()))));
    let o = lra(&["deform", "check-equivalence", "--deformation", &def, "--other", &other, "--datum", &datum]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let o = lra(&["deform", "check-equivalence", "--deformation", &def, "--other", &def, "--datum", &datum]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_out(&o)["details"]["first_failure"]["condition"], json!("operator-linear"));
    let zero = s.write("zero.json", &serde_json::to_string(&Vector::zeros(2)).unwrap());
    let wrong = s.write("wrong.json", &serde_json::to_string(&Vector::zeros(3)).unwrap());
    assert_eq!(code(&lra(&["build", "trivialize", "--deformation", &def, "--element", &wrong])), 2);
    assert_eq!(code(&lra(&["build", "trivialize", "--deformation", &def, "--element", &zero])), 1);
}

#[test]
fn k_cohomology_of_a_fixture() {
    let o = lra(&["cohomology", "--bundle", &fixture("trb-nijenhuis-seed42.json"), "--degree", "1", "--of-k"]);
    assert_eq!(code(&o), 0);
    let d = &json_out(&o)["details"];
    assert_eq!(d["of"], json!("operator"));
    let (z, b, h) = (d["z"].as_u64().unwrap(), d["b"].as_u64().unwrap(), d["h"].as_u64().unwrap());
    assert_eq!(h, z - b);
}
