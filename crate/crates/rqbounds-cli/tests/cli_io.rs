//! End-to-end checks of the binary: file parsing, JSON schema, exit
//! codes, and determinism of the output streams.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rqbounds::Matrix;
use rqbounds_cli::mtx;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_rqbounds")
}

fn run(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn indefinite_diag_fixture(dir: &Path) -> (PathBuf, PathBuf) {
    // diag(1, 0, -1) in coordinate format and the all-ones probe.
    let matrix = write_file(
        dir,
        "diag3.mtx",
        "%%MatrixMarket matrix coordinate real symmetric\n\
         % indefinite diagonal\n\
         3 3 3\n\
         1 1 1.0\n\
         2 2 0.0\n\
         3 3 -1.0\n",
    );
    let vector = write_file(dir, "ones.txt", "1.0\n1.0\n1.0\n");
    (matrix, vector)
}

#[test]
fn matrix_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let n = 7;
    let mut rows = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let v: f64 = rng.random_range(-1.0..1.0);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    let m = Matrix::from_rows(rows).unwrap();
    let path = dir.path().join("round.mtx");
    let mut f = std::fs::File::create(&path).unwrap();
    mtx::write_real_matrix(&mut f, &m).unwrap();
    drop(f);
    match mtx::read_matrix_file(&path).unwrap() {
        mtx::MatrixData::Real(back) => {
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(back.get(i, j).to_bits(), m.get(i, j).to_bits());
                }
            }
        }
        _ => panic!("expected a real matrix"),
    }
}

#[test]
fn complex_round_trip_is_bit_exact() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let n = 5;
    let mut rows = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
    }
    let m = Matrix::from_rows(rows).unwrap();
    let path = dir.path().join("round_c.mtx");
    let mut f = std::fs::File::create(&path).unwrap();
    mtx::write_complex_matrix(&mut f, &m).unwrap();
    drop(f);
    match mtx::read_matrix_file(&path).unwrap() {
        mtx::MatrixData::Complex(back) => {
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(back.get(i, j), m.get(i, j));
                }
            }
        }
        _ => panic!("expected a complex matrix"),
    }

    let vec_path = dir.path().join("round_v.mtx");
    let values: Vec<Complex64> = (0..4)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mut f = std::fs::File::create(&vec_path).unwrap();
    mtx::write_complex_vector(&mut f, &values).unwrap();
    drop(f);
    match mtx::read_vector_file(&vec_path).unwrap() {
        mtx::VectorData::Complex(back) => assert_eq!(back, values),
        _ => panic!("expected a complex vector"),
    }
}

#[test]
fn array_symmetric_lower_triangle() {
    let dir = tempfile::tempdir().unwrap();
    // [[1, 2], [2, 5]] stored as the lower triangle, column-major.
    let path = write_file(
        dir.path(),
        "sym.mtx",
        "%%MatrixMarket matrix array real symmetric\n2 2\n1.0\n2.0\n5.0\n",
    );
    match mtx::read_matrix_file(&path).unwrap() {
        mtx::MatrixData::Real(m) => {
            assert_eq!(m.get(0, 0), 1.0);
            assert_eq!(m.get(0, 1), 2.0);
            assert_eq!(m.get(1, 0), 2.0);
            assert_eq!(m.get(1, 1), 5.0);
        }
        _ => panic!("expected real"),
    }
}

#[test]
fn hermitian_coordinate_mirrors_with_conjugation() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "herm.mtx",
        "%%MatrixMarket matrix coordinate complex hermitian\n\
         2 2 3\n\
         1 1 2.0 0.0\n\
         2 1 0.0 1.0\n\
         2 2 -1.0 0.0\n",
    );
    match mtx::read_matrix_file(&path).unwrap() {
        mtx::MatrixData::Complex(m) => {
            assert_eq!(m.get(1, 0), Complex64::new(0.0, 1.0));
            assert_eq!(m.get(0, 1), Complex64::new(0.0, -1.0));
        }
        _ => panic!("expected complex"),
    }
}

#[test]
fn bounds_json_on_indefinite_diag() {
    let dir = tempfile::tempdir().unwrap();
    let (matrix, vector) = indefinite_diag_fixture(dir.path());
    let out = run(&[
        "bounds",
        "--matrix",
        matrix.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");

    assert_eq!(doc["command"], "bounds");
    assert_eq!(doc["inputs"]["dim"], 3);
    assert_eq!(doc["inputs"]["field"], "real");
    let reports = doc["reports"].as_array().unwrap();
    let find = |name: &str| {
        reports
            .iter()
            .find(|r| r["bound_name"] == name)
            .unwrap_or_else(|| panic!("missing {name}"))
    };

    // rho(y) = 0 sits on the spectrum: the gap-interval family is skipped.
    assert_eq!(find("temple")["skipped"], true);
    assert_eq!(find("improved_temple")["skipped"], true);

    // The existence bound runs: 0 <= sqrt(2/3).
    let kw = find("krylov_weinstein");
    assert_eq!(kw["skipped"], false);
    assert_eq!(kw["lhs"].as_f64().unwrap(), 0.0);
    assert!((kw["rhs"].as_f64().unwrap() - 0.816_496_580_927_726).abs() < 1e-15);
    assert_eq!(kw["holds"], true);

    // 17 significant digits in the serialized floats.
    assert!(
        text.contains("8.1649658092772603e-1"),
        "missing full-precision value in {text}"
    );
    // exit 0: every certified bound that ran holds
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bounds_text_mentions_each_bound() {
    let dir = tempfile::tempdir().unwrap();
    let (matrix, vector) = indefinite_diag_fixture(dir.path());
    let out = run(&[
        "bounds",
        "--matrix",
        matrix.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "apriori_sin2",
        "mixed_tan",
        "temple",
        "kato_temple",
        "gap_bound",
        "krylov_weinstein",
        "improved_temple",
        "improved_kato_temple",
        "improved_krylov_weinstein",
        "classical_sin_theta",
    ] {
        assert!(text.contains(name), "missing {name} in:\n{text}");
    }
}

#[test]
fn bounds_with_reference_vector() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write_file(
        dir.path(),
        "diag.mtx",
        "%%MatrixMarket matrix coordinate real symmetric\n3 3 3\n1 1 0.0\n2 2 1.0\n3 3 5.0\n",
    );
    let vector = write_file(dir.path(), "y.txt", "1.0\n0.4\n0.1\n");
    let reference = write_file(dir.path(), "x.txt", "1.0\n0.0\n0.0\n");
    let out = run(&[
        "bounds",
        "--matrix",
        matrix.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
        "--ref-vector",
        reference.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    let apriori = reports
        .iter()
        .find(|r| r["bound_name"] == "apriori_sin2")
        .unwrap();
    assert_eq!(apriori["skipped"], false);
    assert_eq!(apriori["holds"], true);
}

#[test]
fn malformed_matrix_gives_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(dir.path(), "bad.mtx", "not a matrix market file\n1 2 3\n");
    let vector = write_file(dir.path(), "v.txt", "1.0\n1.0\n");
    let out = run(&[
        "bounds",
        "--matrix",
        bad.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn non_hermitian_matrix_gives_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let skew = write_file(
        dir.path(),
        "skew.mtx",
        "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 1.0\n2 1 -1.0\n",
    );
    let vector = write_file(dir.path(), "v.txt", "1.0\n1.0\n");
    let out = run(&[
        "bounds",
        "--matrix",
        skew.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Hermitian"), "stderr: {err}");
}

#[test]
fn dimension_mismatch_gives_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let (matrix, _) = indefinite_diag_fixture(dir.path());
    let vector = write_file(dir.path(), "short.txt", "1.0\n1.0\n");
    let out = run(&[
        "bounds",
        "--matrix",
        matrix.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn complex_inputs_promote_real_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let (matrix, _) = indefinite_diag_fixture(dir.path());
    let vector = write_file(
        dir.path(),
        "cv.mtx",
        "%%MatrixMarket matrix array complex general\n3 1\n1.0 0.0\n0.0 1.0\n1.0 0.0\n",
    );
    let out = run(&[
        "bounds",
        "--matrix",
        matrix.to_str().unwrap(),
        "--vector",
        vector.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["inputs"]["field"], "complex");
}

#[test]
fn verify_output_is_byte_identical() {
    let args = ["verify", "--trials", "10", "--seed", "1", "--dims", "2..6"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn verify_json_schema() {
    let out = run(&[
        "verify", "--trials", "5", "--seed", "3", "--dims", "2..4", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["inputs"]["trials"], 5);
    assert_eq!(doc["pass"], true);
    assert!(doc["scalars"]["total_violations"].as_f64().unwrap() == 0.0);
}

#[test]
fn example_davis_kahan_json_values() {
    let out = run(&[
        "example",
        "davis-kahan",
        "--n",
        "64",
        "--eps",
        "0.5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["pass"], true);
    let scalars = &doc["scalars"];
    assert!((scalars["rho"].as_f64().unwrap() - 1.5).abs() <= 1e-12);
    assert!((scalars["improved_lhs"].as_f64().unwrap() - 0.25).abs() <= 1e-12);
    assert!((scalars["improved_rhs"].as_f64().unwrap() - 0.75).abs() <= 1e-12);
}

#[test]
fn example_sin_theta_flags_naive_substitution() {
    let out = run(&["example", "sin-theta", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["scalars"]["naive_projected_rhs"].as_f64().unwrap(), 0.0);
    let classical = &doc["reports"][0];
    assert_eq!(classical["bound_name"], "classical_sin_theta");
    assert_eq!(classical["ingredients"]["naive_violation"].as_f64().unwrap(), 1.0);
}

#[test]
fn example_tightness_passes() {
    let out = run(&["example", "tightness", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_example_gives_exit_two() {
    let out = run(&["example", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_dims_flag_rejected() {
    let out = run(&["verify", "--dims", "9..2"]);
    assert_eq!(out.status.code(), Some(2));
}
