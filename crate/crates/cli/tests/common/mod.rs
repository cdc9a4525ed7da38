use std::path::PathBuf;

use angspec_cli::run_with;

/// Runs the CLI in-process; returns exit code, stdout and stderr.
pub fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("angspec").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Pinned invocations and the files holding their expected bytes.
pub const GOLDEN: [(&str, &[&str]); 3] = [
    (
        "identities_sin.json",
        &[
            "identities",
            "--kind",
            "sin",
            "--n-max",
            "8",
            "--samples",
            "1000",
            "--min-dist",
            "1e-3",
            "--seed",
            "42",
            "--format",
            "json",
            "--deterministic",
        ],
    ),
    (
        "angular_n1.csv",
        &[
            "angular",
            "--N",
            "1",
            "--g1",
            "2",
            "--g2",
            "3",
            "--m-max",
            "3",
            "--method",
            "both",
            "--grid",
            "2000",
            "--format",
            "csv",
            "--deterministic",
        ],
    ),
    (
        "reductions_calogero.json",
        &[
            "reductions",
            "--check",
            "calogero",
            "--samples",
            "1000",
            "--seed",
            "7",
            "--deterministic",
        ],
    ),
];

/// One malformed input per exit-code class: (class, args, expected code).
pub const EXIT_CASES: [(&str, &[&str], i32); 5] = [
    (
        "unknown flag",
        &["angular", "--N", "1", "--g1", "2", "--g2", "3", "--bogus"],
        1,
    ),
    (
        "coupling below 1",
        &["potential", "--N", "2", "--g1", "0.5", "--g2", "2"],
        1,
    ),
    (
        "unwritable output",
        &[
            "potential",
            "--N",
            "2",
            "--g1",
            "2",
            "--g2",
            "2",
            "--out",
            "/nonexistent/dir/p.json",
        ],
        1,
    ),
    (
        "grid too coarse",
        &[
            "angular", "--N", "1", "--g1", "2", "--g2", "3", "--m-max", "60", "--grid", "64",
            "--method", "fd",
        ],
        2,
    ),
    (
        "strict breach",
        &[
            "reductions",
            "--check",
            "bc2",
            "--samples",
            "50",
            "--strict",
        ],
        3,
    ),
];
