use std::path::PathBuf;
use std::process::Command as Process;
use std::sync::Arc;

use hopfwreath::group::{builtin_group, builtin_group_extension, kk_embed_group, GroupAlgebra};
use hopfwreath::hopf::{check_algebra, check_axioms, group_likes, primitives_up_to, Status};
use hopfwreath::lie::{builtin_lie, builtin_lie_extension, kk_embed_lie, Envelope};
use hopfwreath::smash::{
    group_hopf_round_trip, group_wreath_comparison, lie_hopf_round_trip, smash_product, wreath_hopf_group,
    wreath_hopf_lie, TableAction, LIE_ACTION_WINDOW,
};
use hopfwreath_cli::{emit_report, main_with_args, run, Command, Family, OutputMode, Report, RunConfig};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn cfg(command: Command) -> RunConfig {
    RunConfig::new(command)
}

fn library(section: &str, r: hopfwreath::hopf::AxiomReport) -> Vec<(String, Status, Vec<Vec<String>>)> {
    let mut rep = Report::new("");
    rep.absorb(section, r);
    rep.checks.into_iter().map(|c| (c.name, c.status, c.witnesses)).collect()
}

fn checks(r: &Report) -> Vec<(String, Status, Vec<Vec<String>>)> {
    r.checks.iter().map(|c| (c.name.clone(), c.status, c.witnesses.clone())).collect()
}

fn without(r: &Report, name: &str) -> Vec<(String, Status, Vec<Vec<String>>)> {
    checks(r).into_iter().filter(|c| c.0 != name).collect()
}

#[test]
fn check_axioms_matches_library() {
    let mut c = cfg(Command::CheckAxioms);
    c.group = Some("builtin:Q8".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    let lib = check_axioms(&GroupAlgebra::new(builtin_group("Q8").unwrap()), None);
    assert_eq!(without(&r, "random-sweep"), library("", lib));

    let mut c = cfg(Command::CheckAxioms);
    c.lie = Some("builtin:heisenberg".into());
    c.n = 3;
    let r = run(&c).unwrap();
    let lib = check_axioms(&Envelope::new(builtin_lie("heisenberg").unwrap(), 3), None);
    assert_eq!(without(&r, "random-sweep"), library("", lib));
}

#[test]
fn wreath_group_matches_library() {
    let mut c = cfg(Command::WreathGroup);
    c.a = Some("builtin:C2".into());
    c.q = Some("builtin:C2".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    let hopf = wreath_hopf_group(builtin_group("C2").unwrap(), builtin_group("C2").unwrap()).unwrap();
    let mut expected = library("smash", check_axioms(&*hopf.smash, None));
    expected.extend(library("tau", hopf.tau.check(None)));
    assert_eq!(without(&r, "dimension"), expected);
}

#[test]
fn wreath_lie_matches_library() {
    let mut c = cfg(Command::WreathLie);
    c.a = Some("builtin:abelian-1".into());
    c.q = Some("builtin:affine-2dim".into());
    c.n = 2;
    let r = run(&c).unwrap();
    assert!(r.passed(), "{r:?}");
    let hopf = wreath_hopf_lie(builtin_lie("abelian-1").unwrap(), builtin_lie("affine-2dim").unwrap(), 2).unwrap();
    let w = Some(LIE_ACTION_WINDOW.min(3));
    let smash = library("smash", check_axioms(&*hopf.smash, w));
    assert!(smash.iter().all(|c| checks(&r).contains(c)));
    assert!(library("tau", hopf.tau().check(w)).iter().all(|c| checks(&r).contains(c)));
}

#[test]
fn kk_embed_commands_match_library() {
    let mut c = cfg(Command::KkEmbedGroup);
    c.ext = Some("builtin:d4-over-center".into());
    let r = run(&c).unwrap();
    let ext = builtin_group_extension("d4-over-center").unwrap();
    assert_eq!(checks(&r), library("", kk_embed_group(&ext).unwrap().check()));

    let mut c = cfg(Command::KkEmbedLie);
    c.ext = Some(data("heisenberg.json"));
    let r = run(&c).unwrap();
    assert!(r.passed());
    assert!(r.summary.iter().any(|l| l == "9/9 bracket pairs preserved"));
    let ext = builtin_lie_extension("heisenberg-over-abelian2").unwrap();
    assert_eq!(checks(&r), library("", kk_embed_lie(&ext, 4).unwrap().check(None)));
}

#[test]
fn smash_matches_library() {
    let mut c = cfg(Command::Smash);
    c.q = Some("builtin:C2".into());
    c.h = Some("builtin:C3".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    let (q, h) = (Arc::new(builtin_group("C2").unwrap()), Arc::new(builtin_group("C3").unwrap()));
    let act = TableAction::new(Arc::new(GroupAlgebra::new(q)), Arc::new(GroupAlgebra::new(h)), Default::default());
    let s = smash_product(act, None).unwrap();
    let lib = library("smash", check_axioms(&s, None));
    assert!(lib.iter().all(|c| checks(&r).contains(c)));
}

#[test]
fn crossed_witnesses_both_cocycles() {
    let mut c = cfg(Command::Crossed);
    c.q = Some("builtin:C2".into());
    c.h = Some("builtin:C2".into());
    c.expect = Some("builtin:C2xC2".into());
    assert!(run(&c).unwrap().passed());
    c.cocycle = Some(data("c2-cocycle.json"));
    let r = run(&c).unwrap();
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.checks.last().unwrap().witnesses, vec![vec!["C2xC2".to_string()]]);
    c.expect = Some("builtin:C4".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    let cp = hopfwreath::smash::c2_crossed_c2(true);
    let lib = library("", check_algebra(&cp, None));
    assert!(lib.iter().all(|x| checks(&r).contains(x)));
}

#[test]
fn hker_both_families() {
    for ext in ["builtin:c4-over-c2", "builtin:c2xc2-over-c2", "builtin:d4-over-center"] {
        let mut c = cfg(Command::Hker);
        c.ext = Some(ext.into());
        assert!(run(&c).unwrap().passed(), "{ext}");
    }
    let mut c = cfg(Command::Hker);
    c.ext = Some("builtin:affine-over-abelian1".into());
    c.family = Family::Lie;
    c.n = 3;
    let r = run(&c).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn group_likes_and_primitives_match_library() {
    let mut c = cfg(Command::GroupLikes);
    c.group = Some("builtin:S3".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    assert_eq!(group_likes(&GroupAlgebra::new(builtin_group("S3").unwrap())).len(), 6);

    let mut c = cfg(Command::Primitives);
    c.lie = Some("builtin:sl2".into());
    let r = run(&c).unwrap();
    assert!(r.passed());
    let p = primitives_up_to(&Envelope::new(builtin_lie("sl2").unwrap(), 4), Some(4));
    assert_eq!(r.summary[0], format!("{} primitives in U(sl2) up to degree 4", p.len()));
}

#[test]
fn conv_inverse_on_both_families() {
    for (group, lie) in [(Some("builtin:D4"), None), (None, Some("builtin:affine-2dim"))] {
        let mut c = cfg(Command::ConvInverse);
        c.group = group.map(String::from);
        c.lie = lie.map(String::from);
        c.n = 3;
        assert!(run(&c).unwrap().passed());
    }
}

#[test]
fn verify_commands_match_library() {
    let mut c = cfg(Command::VerifyTheoremG);
    c.a = Some("builtin:C2".into());
    c.q = Some("builtin:C2".into());
    let r = run(&c).unwrap();
    let (a, q) = (Arc::new(builtin_group("C2").unwrap()), Arc::new(builtin_group("C2").unwrap()));
    assert_eq!(checks(&r), library("", group_wreath_comparison(&a, &q).unwrap()));
    assert!(r.summary[0].starts_with("8-dimensional"));

    let mut c = cfg(Command::VerifyTheoremL);
    c.a = Some("builtin:abelian-1".into());
    c.q = Some("builtin:heisenberg".into());
    c.n = 2;
    let r = run(&c).unwrap();
    let hopf = wreath_hopf_lie(builtin_lie("abelian-1").unwrap(), builtin_lie("heisenberg").unwrap(), 2).unwrap();
    assert_eq!(checks(&r), library("", hopf.bracket_comparison(None)));
    assert!(r.passed());
}

#[test]
fn round_trip_matches_library() {
    let mut c = cfg(Command::RoundTrip);
    c.ext = Some(data("c4-over-c2.json"));
    let r = run(&c).unwrap();
    let ext = builtin_group_extension("c4-over-c2").unwrap();
    assert_eq!(checks(&r), library("", group_hopf_round_trip(&ext).unwrap().report()));

    let mut c = cfg(Command::RoundTrip);
    c.ext = Some("builtin:heisenberg-over-abelian2".into());
    c.family = Family::Lie;
    c.n = 3;
    let r = run(&c).unwrap();
    let ext = builtin_lie_extension("heisenberg-over-abelian2").unwrap();
    assert_eq!(checks(&r), library("", lie_hopf_round_trip(&ext, 3).unwrap().report()));
    assert!(r.passed());
}

#[test]
fn empty_report_is_header_only() {
    let r = Report::new("noop");
    assert_eq!(r.exit_code(), 0);
    let text = String::from_utf8(emit_report(&r, OutputMode::Text)).unwrap();
    assert_eq!(text, "command: noop\nresult: pass\n");
}

#[test]
fn failing_check_exits_one_with_witness() {
    let mut r = Report::new("x");
    r.check("broken", vec![vec!["g".into(), "h".into()]]);
    assert_eq!(r.exit_code(), 1);
    let text = String::from_utf8(emit_report(&r, OutputMode::Text)).unwrap();
    assert!(text.contains("FAIL") && text.contains("(g, h)"), "{text}");
}

#[test]
fn json_round_trips() {
    let mut c = cfg(Command::Crossed);
    c.q = Some("builtin:C2".into());
    c.h = Some("builtin:C2".into());
    c.cocycle = Some(data("c2-cocycle.json"));
    c.expect = Some("builtin:C2xC2".into());
    c.timing = true;
    let r = run(&c).unwrap();
    let bytes = emit_report(&r, OutputMode::Json);
    let back: Report = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(back.command, r.command);
    assert_eq!(back.checks, r.checks);
    assert_eq!(back.elapsed_ms, r.elapsed_ms);
    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["checks", "command", "elapsed_ms"]);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["hopfwreath", "check-axioms", "--lie", "builtin:affine-2dim", "--N", "3", "--json"];
    let (a, _, code) = main_with_args(args);
    let (b, _, _) = main_with_args(args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
}

#[test]
fn exit_codes_in_process() {
    let (_, _, ok) = main_with_args(["hopfwreath", "group-likes", "--group", "builtin:C3"]);
    assert_eq!(ok, 0);
    let (_, _, fail) = main_with_args([
        "hopfwreath", "crossed", "--Q", "builtin:C2", "--H", "builtin:C2", "--expect", "builtin:C4",
    ]);
    assert_eq!(fail, 1);
    let (_, err, bad) = main_with_args(["hopfwreath", "wreath-lie", "--A", "builtin:abelian-1", "--Q", "builtin:abelian-1", "--N", "1"]);
    assert_eq!(bad, 2);
    assert!(String::from_utf8(err).unwrap().contains("--N must be at least 2"));
    let (_, _, bad) = main_with_args(["hopfwreath", "primitives", "--lie", "builtin:sl2", "--window", "9"]);
    assert_eq!(bad, 2);
    let (_, _, bad) = main_with_args(["hopfwreath", "check-axioms", "--group", "builtin:A5"]);
    assert_eq!(bad, 2);
    let (_, _, bad) = main_with_args(["hopfwreath", "not-a-command"]);
    assert_eq!(bad, 2);
}

#[test]
fn parse_errors_carry_json_path() {
    let dir = std::env::temp_dir().join(format!("hopfwreath-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"name": "x", "elements": ["a", "b"], "mul": [["a", "b"], ["b", "c"]]}"#).unwrap();
    let (_, err, code) = main_with_args(["hopfwreath", "check-axioms", "--group", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(String::from_utf8(err).unwrap().contains("mul[1][1]"));
}

#[test]
fn binary_honours_seed_and_exit_status() {
    let bin = env!("CARGO_BIN_EXE_hopfwreath");
    let run_with = |seed: &str| {
        Process::new(bin)
            .args(["check-axioms", "--group", "builtin:S3", "--json"])
            .env("HOPFWREATH_SEED", seed)
            .output()
            .unwrap()
    };
    let (a, b) = (run_with("7"), run_with("7"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = run_with("seven");
    assert_eq!(bad.status.code(), Some(2));
    let out = Process::new(bin)
        .args(["crossed", "--Q", "builtin:C2", "--H", "builtin:C2", "--cocycle", &data("c2-cocycle.json"), "--expect", "builtin:C2xC2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
