//! End-to-end checks of the command-line interface: golden outputs,
//! exit codes, piping, worker-pool invariance, and the spawned binary.

use std::io::Cursor;
use std::process::Command;

use extremal_spectra::cli::run;
use extremal_spectra::graph::{cycle_graph, path_graph};
use extremal_spectra::graph6;
use extremal_spectra::quotient::{f_poly, g_poly};

fn run_cli(args: &[&str], stdin_text: &str) -> (i32, String, String) {
    let args: Vec<String> = std::iter::once("spectra".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut input = Cursor::new(stdin_text.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&args, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn construct_bb_complement_is_k33_minus_edge() {
    let (code, out, _) = run_cli(
        &[
            "construct", "--family", "BB", "--n1", "3", "--n2", "3", "--k", "1", "--complement",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "EFz?");
    let g = graph6::decode(out.trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 8));
    assert!(g.bipartition().is_some());
    let mut degs = g.degree_sequence();
    degs.sort_unstable();
    assert_eq!(degs, vec![2, 2, 3, 3, 3, 3]);
}

#[test]
fn construct_pipes_into_spectrum_matching_closed_forms() {
    // Family B: complement spectrum extremes are the f quartic roots.
    let (code, g6, _) = run_cli(
        &[
            "construct", "--family", "B", "--s", "2", "--t", "4", "--k", "3", "--complement",
        ],
        "",
    );
    assert_eq!(code, 0);
    let (code, out, _) = run_cli(&["spectrum"], &g6);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let (hi, lo) = f_poly(2, 4, 3).extreme_roots().unwrap();
    assert!((doc["lambda_1"].as_f64().unwrap() - hi).abs() < 1e-9);
    assert!((doc["lambda_n"].as_f64().unwrap() - lo).abs() < 1e-9);

    // Family BB, join geometry: the g quartic plays the same role.
    let (code, g6, _) = run_cli(
        &[
            "construct", "--family", "BB", "--n1", "7", "--n2", "6", "--k", "2", "--complement",
        ],
        "",
    );
    assert_eq!(code, 0);
    let (code, out, _) = run_cli(&["spectrum"], &g6);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let (hi, lo) = g_poly(7, 6, 2).extreme_roots().unwrap();
    assert!((doc["lambda_1"].as_f64().unwrap() - hi).abs() < 1e-9);
    assert!((doc["lambda_n"].as_f64().unwrap() - lo).abs() < 1e-9);

    // Family calB: complement is a star plus isolated vertices, whose
    // spectral radius is the square root of the star size.
    let (code, g6, _) = run_cli(
        &[
            "construct", "--family", "calB", "--s", "1", "--t", "4", "--k", "2", "--complement",
        ],
        "",
    );
    assert_eq!(code, 0);
    let (code, out, _) = run_cli(&["spectrum"], &g6);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((doc["lambda_1"].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn spectrum_reads_files_and_edge_lists() {
    let c4 = cycle_graph(4).unwrap();
    let path = std::env::temp_dir().join(format!("spectra-cli-test-{}.g6", std::process::id()));
    std::fs::write(&path, format!("{}\n", graph6::encode(&c4))).unwrap();
    let (code, out, _) = run_cli(&["spectrum", "--input", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["lambda_1"], 2.0);
    assert_eq!(doc["lambda_n"], -2.0);

    let p3 = path_graph(3).unwrap();
    let (code, out, _) = run_cli(
        &["spectrum", "--format", "edgelist"],
        &p3.to_edge_list_string(),
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((doc["lambda_1"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn verify_worked_example_confirms() {
    let (code, out, err) = run_cli(
        &["verify", "--theorem", "4.3", "--n", "6", "--kappa", "1"],
        "",
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["verdict"], "confirmed");
    let min = doc["min_value"].as_f64().unwrap();
    assert!((min - -2.7320508075688772).abs() < 1e-9);
    assert!(err.contains("claim 4.3"));
}

#[test]
fn verify_refuted_claim_exits_one() {
    let (code, out, _) = run_cli(
        &["verify", "--theorem", "4.3", "--n", "6", "--kappa", "2"],
        "",
    );
    assert_eq!(code, 1);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["verdict"], "refuted");
}

#[test]
fn verify_cut_lemma_reports_holds() {
    let (code, out, _) = run_cli(
        &["verify", "--theorem", "lemma3.2", "--n", "5", "--kappa", "1"],
        "",
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["class_size"], 490);
}

#[test]
fn verify_out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("spectra-report-{}.json", std::process::id()));
    let (code, out, _) = run_cli(
        &[
            "verify", "--theorem", "3.1", "--n", "5", "--kappa", "1", "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written, out);
}

#[test]
fn usage_errors_name_the_violated_invariant() {
    let (code, _, err) = run_cli(
        &[
            "construct", "--family", "B", "--s", "1", "--t", "2", "--k", "2",
        ],
        "",
    );
    assert_eq!(code, 2);
    assert!(err.contains("t-1 >= kappa required for family B"), "stderr: {err}");

    let (code, _, err) = run_cli(&["construct", "--family", "Z", "--s", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--family must be calB, B, or BB"));

    let (code, _, _) = run_cli(&["frobnicate"], "");
    assert_eq!(code, 2);

    let (code, _, err) = run_cli(&["enumerate", "--n", "8", "--kappa", "1", "--count-only"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--allow-large"));

    let (code, _, err) = run_cli(&["verify", "--theorem", "3.4", "--n", "8", "--kappa", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--allow-large"));

    let (code, _, err) = run_cli(&["verify", "--theorem", "3.4", "--n", "9", "--kappa", "1"], "");
    assert_eq!(code, 2);
    assert!(err.contains("enumeration"), "stderr: {err}");
}

#[test]
fn job_count_never_changes_output() {
    let mut outputs = Vec::new();
    for jobs in ["1", "2", "8"] {
        let (code, out, _) = run_cli(
            &[
                "verify", "--theorem", "3.4", "--n", "6", "--kappa", "1", "--jobs", jobs,
            ],
            "",
        );
        assert_eq!(code, 0);
        outputs.push(out);
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);

    let mut counts = Vec::new();
    for jobs in ["1", "3"] {
        let (code, out, _) = run_cli(
            &[
                "enumerate", "--n", "6", "--kappa", "2", "--dedup", "--jobs", jobs,
            ],
            "",
        );
        assert_eq!(code, 0);
        counts.push(out);
    }
    assert_eq!(counts[0], counts[1]);
}

#[test]
fn enumerate_json_shape() {
    let (code, out, _) = run_cli(
        &["enumerate", "--n", "5", "--kappa", "3", "--diameter", "2", "--dedup"],
        "",
    );
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["kappa"], 3);
    let count = doc["count"].as_u64().unwrap();
    let classes = doc["graphs"].as_array().unwrap();
    assert_eq!(doc["class_count"].as_u64().unwrap() as usize, classes.len());
    assert!(count >= classes.len() as u64);
    for g6 in classes {
        let g = graph6::decode(g6.as_str().unwrap()).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.diameter().unwrap(), 2);
    }
}

#[test]
fn sweep_csv_contains_honest_tie_row() {
    let (code, out, _) = run_cli(&["sweep", "--lemma", "4.2", "--max-n", "10"], "");
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n1,n2,kappa,min_root_g,min_root_g_shifted,monotone,alpha"
    );
    // The (4,2;2) row ties with its shifted neighbor at -2 exactly, so
    // the strict monotonicity column must read false there.
    let tie = out
        .lines()
        .find(|l| l.starts_with("4,2,2,"))
        .expect("row for (4,2;2)");
    assert_eq!(tie, "4,2,2,-2,-2,false,-2");

    let (code, out, _) = run_cli(&["sweep", "--lemma", "3.3", "--max-n", "12"], "");
    assert_eq!(code, 0);
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[5], "true", "f monotonicity row: {line}");
        assert_eq!(fields[7], "true", "theta clearance row: {line}");
    }
}

#[test]
fn audit_exits_zero_despite_failing_rows() {
    let (code, out, err) = run_cli(&["audit", "--max-n", "10"], "");
    assert_eq!(code, 0);
    assert!(out.contains("2*sigma/n"));
    assert!(out.contains("false"), "expected at least one failing row");
    assert!(err.contains("fail"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_cli(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("construct"));
    assert!(out.contains("spectrum"));
}

#[test]
fn spawned_binary_honors_spectra_jobs() {
    let bin = env!("CARGO_BIN_EXE_spectra");

    let with_env = Command::new(bin)
        .args(["verify", "--theorem", "3.1", "--n", "5", "--kappa", "2"])
        .env("SPECTRA_JOBS", "2")
        .output()
        .expect("binary runs");
    assert!(with_env.status.success());

    let (code, in_process, _) = run_cli(
        &[
            "verify", "--theorem", "3.1", "--n", "5", "--kappa", "2", "--jobs", "1",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(with_env.stdout).unwrap(), in_process);

    let bad_jobs = Command::new(bin)
        .args(["construct", "--family", "calB", "--s", "1", "--t", "2", "--k", "1"])
        .env("SPECTRA_JOBS", "not-a-number")
        .output()
        .expect("binary runs");
    // An unparseable SPECTRA_JOBS falls back to the default pool.
    assert!(bad_jobs.status.success());
}
