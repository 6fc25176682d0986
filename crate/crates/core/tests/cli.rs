use std::fs;
use std::path::Path;

use intriguing::cli::run;
use intriguing::formats::parse_sets;

fn cli(dir: &Path, args: &[&str]) -> i32 {
    let mut argv = vec!["intriguing".to_string()];
    for a in args {
        argv.push(a.replace("@", &dir.display().to_string()));
    }
    run(argv)
}

fn set_lines(path: &Path) -> usize {
    parse_sets(&fs::read_to_string(path).unwrap()).unwrap().len()
}

#[test]
fn petersen_negative_cocliques() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "petersen", "-o", "@"]), 0);
    assert!(d.join("petersen.group").exists());
    assert_eq!(cli(d, &["enumerate", "@/petersen.graph", "neg", "--size-cap", "4", "-o", "@/neg.set"]), 0);
    assert_eq!(set_lines(&d.join("neg.set")), 5);
    let manifest = fs::read_to_string(d.join("neg.set.manifest")).unwrap();
    assert!(manifest.contains("exhaustive=true"));
    assert!(manifest.contains("sha256="));
    assert_eq!(
        cli(d, &["enumerate", "@/petersen.graph", "any", "--group", "@/petersen.group", "-o", "@/reps.set"]),
        0
    );
    assert_eq!(set_lines(&d.join("reps.set")), 3);
}

#[test]
fn clebsch_forty_four_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "clebsch", "-o", "@"]), 0);
    assert_eq!(cli(d, &["enumerate", "@/clebsch.graph", "pos", "--size-cap", "4", "-o", "@/c4.set"]), 0);
    assert_eq!(set_lines(&d.join("c4.set")), 40);
    assert_eq!(cli(d, &["enumerate", "@/clebsch.graph", "neg", "-o", "@/neg.set"]), 0);
    assert_eq!(cli(d, &["verify", "@/clebsch.graph", "@/c4.set", "-o", "@/checked.set"]), 0);
    assert_eq!(fs::read(d.join("c4.set")).unwrap(), fs::read(d.join("checked.set")).unwrap());
    assert_eq!(cli(d, &["intersect", "@/clebsch.graph", "@/c4.set", "@/neg.set"]), 0);
}

#[test]
fn pentagon_gives_an_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "pentagon", "-o", "@"]), 0);
    assert_eq!(cli(d, &["enumerate", "@/pentagon.graph", "any", "-o", "@/p.set"]), 0);
    assert_eq!(fs::read_to_string(d.join("p.set")).unwrap(), "");
    let manifest = fs::read_to_string(d.join("p.set.manifest")).unwrap();
    assert!(manifest.contains("reason=irrational eigenvalues"));
}

#[test]
fn output_does_not_depend_on_threads() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "hoffman_singleton", "-o", "@"]), 0);
    let g = "@/hoffman_singleton.graph";
    assert_eq!(cli(d, &["--threads", "1", "enumerate", g, "neg", "--size-cap", "15", "-o", "@/a.set"]), 0);
    assert_eq!(cli(d, &["--threads", "4", "enumerate", g, "neg", "--size-cap", "15", "-o", "@/b.set"]), 0);
    let a = fs::read(d.join("a.set")).unwrap();
    assert_eq!(a, fs::read(d.join("b.set")).unwrap());
    assert_eq!(set_lines(&d.join("a.set")), 100);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "no_such_graph", "-o", "@"]), 1);
    assert_eq!(cli(d, &["enumerate", "@/missing.graph", "neg"]), 1);
    assert_eq!(cli(d, &["build", "gewirtz", "-o", "@"]), 0);
    let code = cli(d, &["--budget-nodes", "5", "enumerate", "@/gewirtz.graph", "neg", "-o", "@/g.set"]);
    assert_eq!(code, 2);
    let manifest = fs::read_to_string(d.join("g.set.manifest")).unwrap();
    assert!(manifest.contains("exhaustive=false"));
    fs::write(d.join("bad.graph"), "n=3\n0 1\n1 7\n").unwrap();
    assert_eq!(cli(d, &["enumerate", "@/bad.graph", "neg"]), 1);
}

#[test]
fn quadrangle_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(cli(d, &["build", "q-minus", "5", "3", "-o", "@"]), 0);
    let geo = "@/q5minus_3.geo";
    assert_eq!(cli(d, &["derive", "hemisystem", geo, "-o", "@"]), 0);
    let hemi = fs::read_dir(d)
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.extension().is_some_and(|x| x == "set"))
        .expect("hemisystem set file");
    let hemi = hemi.display().to_string();
    assert_eq!(cli(d, &["derive", "minus-perp", geo, "0", "--set", &hemi, "-o", "@"]), 0);
    assert!(d.join("q5minus_3_minus_perp_0.geo").exists());
    assert_eq!(cli(d, &["infinity", geo, "--inf", "perp:0", "--set", &hemi, "-o", "@/inf.txt"]), 0);
    let report = fs::read_to_string(d.join("inf.txt")).unwrap();
    assert!(report.contains("restricted="));
    let trace = fs::read_dir(d)
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| p.to_string_lossy().contains("minus_perp_0") && p.extension().is_some_and(|x| x == "set"))
        .expect("trace file");
    let trace = trace.display().to_string();
    assert_eq!(cli(d, &["complete", geo, "0", &trace, "-o", "@/done.set"]), 0);
    let done = parse_sets(&fs::read_to_string(d.join("done.set")).unwrap()).unwrap();
    let orig = parse_sets(&fs::read_to_string(&hemi).unwrap()).unwrap();
    assert_eq!(done[0].indices, orig[0].indices);
}
