mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }

    fn lines(&self) -> Vec<Value> {
        self.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
    }

    /// The manifest is the last stderr line.
    fn manifest(&self) -> Value {
        let line = self.stderr.lines().last().expect("manifest line");
        let m: Value = serde_json::from_str(line).unwrap();
        common::schema::check("manifest.schema.json", &m);
        m
    }
}

fn extset_with(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_extset"));
    cmd.args(args)
        .env_remove("EXTSET_BUDGET_OVERRIDE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn extset(args: &[&str]) -> Run {
    extset_with(args, &[], None)
}

fn family_sets(v: &Value) -> Vec<u64> {
    v["sets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| {
            let e: Vec<usize> = s.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
            common::mask(&e)
        })
        .collect()
}

#[test]
fn construct_then_check_round_trip() {
    let b = common::binom;
    for k in 2..=4u64 {
        for n in 2 * k + 1..=10 {
            let (ns, ks) = (n.to_string(), k.to_string());
            let mut cases: Vec<(Vec<String>, u64, u64, u64)> = vec![
                // (extra args, size, Delta, delta)
                (vec!["star".into()], b(n - 1, k - 1), b(n - 1, k - 1), b(n - 2, k - 2)),
                (
                    vec!["hm".into()],
                    b(n - 1, k - 1) - b(n - k - 1, k - 1) + 1,
                    b(n - 1, k - 1) - b(n - k - 1, k - 1),
                    b(n - 2, k - 2) - b(n - k - 2, k - 2),
                ),
            ];
            for s in 1..=3u64 {
                // A_0 meets [s]: an element of [s] has the full star.
                let size = b(n, k) - b(n - s, k);
                let low = b(n - 1, k - 1) - b(n - 1 - s, k - 1);
                cases.push((vec!["a0".into(), "--s".into(), s.to_string()], size, b(n - 1, k - 1), low));
            }
            for (extra, size, hi, lo) in cases {
                let mut args: Vec<&str> = vec!["construct"];
                args.extend(extra.iter().map(String::as_str));
                args.extend(["--n", &ns, "--k", &ks, "--format", "json"]);
                let built = extset(&args);
                assert_eq!(built.code, 0, "{}", built.stderr);
                let fam = built.json();
                common::schema::check("family.schema.json", &fam);
                assert_eq!(family_sets(&fam).len() as u64, size, "{args:?}");

                let checked = extset_with(&["check-family", "-"], &[], Some(&built.stdout));
                assert_eq!(checked.code, 0, "{}", checked.stderr);
                let r = checked.json();
                common::schema::check("check-family.schema.json", &r);
                assert_eq!(r["size"], size, "{args:?}");
                assert_eq!(r["Delta"], hi, "{args:?}");
                assert_eq!(r["delta"], lo, "{args:?}");
                assert_eq!(r["gamma"], size - hi, "{args:?}");
            }
        }
    }
}

#[test]
fn text_format_round_trips_too() {
    let built = extset(&["construct", "hm", "--n", "9", "--k", "4"]);
    assert!(built.stdout.starts_with("# "));
    let r = extset_with(&["check-family", "-", "--t", "2"], &[], Some(&built.stdout)).json();
    let hm = common::to_family(9, 4, &family_sets(&extset(&["construct", "hm", "--n", "9", "--k", "4", "--format", "json"]).json()));
    assert_eq!(r["delta_t"], common::min_t_degree(9, 2, &common::masks(&hm)));
    assert_eq!(r["intersecting"], true);
    assert_eq!(r["trivial"], false);
    assert_eq!(r["nu"], 1);
    assert_eq!(r["tau"], 2);
}

#[test]
fn verify_examples() {
    let r = extset(&["verify", "--claim", "EQ07", "--k", "3..6", "--t", "1..k-1", "--n", "2k+1..30"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let recs = r.lines();
    // sum over k of (k-1) * (30 - 2k)
    assert_eq!(recs.len(), (3..=6).map(|k| (k - 1) * (30 - 2 * k)).sum::<usize>());
    for rec in &recs {
        common::schema::check("verify-record.schema.json", rec);
        assert_eq!(rec["holds"], true, "{rec}");
    }

    let r = extset(&["verify", "--claim", "EQ19", "--t", "1", "--n-rule", "2k+5", "--k", "30..60"]);
    assert_eq!(r.code, 0);
    let recs = r.lines();
    assert_eq!(recs.len(), 31);
    assert!(recs.iter().all(|x| x["holds"] == true));

    let r = extset(&["verify", "--claim", "EQ25", "--n", "10", "--k", "4"]);
    let rec = &r.lines()[0];
    assert_eq!((rec["holds"].clone(), rec["lhs"].clone()), (Value::Bool(true), Value::from("70")));
    assert_eq!(r.manifest()["subcommand"], "verify");
}

#[test]
fn verify_skips_points_missing_parameters() {
    let r = extset(&["verify", "--claim", "EQ13", "--n", "9", "--k", "3", "--t", "1"]);
    assert_eq!(r.code, 0);
    let rec = &r.lines()[0];
    common::schema::check("verify-record.schema.json", rec);
    assert!(rec["skipped"].as_str().unwrap().contains('u'));
}

#[test]
fn verify_csv_has_a_header_and_a_row_per_point() {
    let r = extset(&["verify", "--claim", "EQ07", "--k", "4", "--t", "1..3", "--n", "9..12", "--format", "csv"]);
    assert_eq!(r.code, 0);
    let mut rd = csv::Reader::from_reader(r.stdout.as_bytes());
    let headers = rd.headers().unwrap().clone();
    let holds = headers.iter().position(|h| h == "holds").unwrap();
    let rows: Vec<_> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|row| &row[holds] == "true"));
}

#[test]
fn thresholds_report() {
    let r = extset(&["thresholds", "--claim", "EQ19", "--n-rule", "2k+6", "--t", "1"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    common::schema::check("thresholds.schema.json", &v);
    assert_eq!(v["threshold"], 15);
    let r = extset(&["thresholds", "--claim", "EQ09", "--n-rule", "2k+4"]);
    assert!(r.json()["threshold"].as_i64().unwrap() <= 12);
}

#[test]
fn search_examples() {
    let r = extset(&["search", "--preset", "ekr-degree", "--n", "7", "--k", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    common::schema::check("search-result.schema.json", &v);
    assert_eq!(v["optimum"], 5);
    assert_eq!(v["status"], "exact");
    let sets = family_sets(&v["witness"]["family"]);
    assert_eq!(sets.len(), 15);
    assert!(common::trivial(&sets));

    let r = extset(&["search", "--preset", "ekr-degree", "--n", "6", "--k", "3"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert!(v["optimum"].as_u64().unwrap() >= 5);
    assert_eq!(v["versus_reference"], 1);

    let r = extset(&["search", "--preset", "problem1", "--k", "3", "--threads", "2"]);
    assert_eq!(r.code, 0);
    common::schema::check("search-result.schema.json", &r.json());

    let r = extset(&["search", "--preset", "problem2", "--n", "5", "--k", "2"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    common::schema::check("search-result.schema.json", &v);
    assert_eq!(v["witness"]["kind"], "pair");

    let r = extset(&["search", "--preset", "maximal-intersecting", "--n", "6", "--k", "3"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    common::schema::check("enumeration.schema.json", &v);
    assert_eq!(v["classes"], common::brute_maximal_intersecting_classes(6, 3));
}

#[test]
fn search_problem_file() {
    let dir = std::env::temp_dir().join(format!("extset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.json");
    let problem = serde_json::json!({
        "constraints": {"n": 8, "k": 2, "matching_at_most": 2},
        "objective": "max_min_t_degree"
    });
    common::schema::check("search-problem.schema.json", &problem);
    std::fs::write(&path, problem.to_string()).unwrap();
    let r = extset(&["search", "--problem", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.json()["optimum"], 2);

    std::fs::write(&path, "{\n  \"constraints\": 3,\n").unwrap();
    let r = extset(&["search", "--problem", path.to_str().unwrap()]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
}

#[test]
fn exit_codes() {
    // 2: bad parameters, unknown claims, clap errors.
    assert_eq!(extset(&["construct", "star", "--n", "3", "--k", "5"]).code, 2);
    assert_eq!(extset(&["verify", "--claim", "EQ99", "--n", "9", "--k", "3"]).code, 2);
    assert_eq!(extset(&["construct", "nonsense", "--n", "3", "--k", "2"]).code, 2);
    assert_eq!(extset(&["no-such-subcommand"]).code, 2);
    assert_eq!(extset(&["search", "--preset", "problem1", "--k", "7"]).code, 2);

    // 3: malformed family input, with the line number.
    let r = extset_with(&["check-family", "-"], &[], Some("5 2\n1 2\n1 9\n"));
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert_eq!(r.manifest()["exit_code"], 3);

    // 4: outside the budget table, and an exhausted override.
    assert_eq!(extset(&["search", "--preset", "ekr-degree", "--n", "11", "--k", "3"]).code, 4);
    let r = extset_with(
        &["search", "--preset", "problem2", "--n", "7", "--k", "3"],
        &[("EXTSET_BUDGET_OVERRIDE", "100")],
        None,
    );
    assert_eq!(r.code, 4);
    let v = r.json();
    common::schema::check("search-result.schema.json", &v);
    assert_eq!(v["status"], "timeout");
    assert_eq!(r.manifest()["exit_code"], 4);

    // 5: a claim that never holds along the requested rule.
    let r = extset(&["thresholds", "--claim", "EQ09", "--n-rule", "2k+2"]);
    assert_eq!(r.code, 5, "{}", r.stderr);
}

#[test]
fn duplicates_are_reported() {
    let r = extset_with(&["check-family", "-"], &[], Some("5 2\n1 2\n1 2\n2 3\n"));
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("duplicate"), "{}", r.stderr);
    let v = r.json();
    assert_eq!((v["size"].clone(), v["duplicates"].clone()), (Value::from(2), Value::from(1)));
}

#[test]
fn manifest_matches_output() {
    let dir = std::env::temp_dir().join(format!("extset-manifest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (out, man) = (dir.join("out.txt"), dir.join("manifest.json"));
    let r = extset(&[
        "--out",
        out.to_str().unwrap(),
        "--manifest",
        man.to_str().unwrap(),
        "construct",
        "a0",
        "--n",
        "9",
        "--k",
        "3",
        "--s",
        "2",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let text = std::fs::read(&out).unwrap();
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&man).unwrap()).unwrap();
    common::schema::check("manifest.schema.json", &m);
    assert_eq!(m["output_sha256"], extset::cli::sha256_hex(&text));
    assert_eq!(m["subcommand"], "construct");
    assert_eq!(m["params"]["s"], 2);

    let r = extset(&["construct", "star", "--n", "6", "--k", "2"]);
    assert_eq!(r.manifest()["output_sha256"], extset::cli::sha256_hex(r.stdout.as_bytes()));
}
