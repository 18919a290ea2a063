//! Matrix Market reading and writing, plus the plain one-number-per-line
//! vector format. Values are written with 17 significant digits so a
//! round trip reproduces every binary64 entry bit-exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_complex::Complex64;
use rqbounds::Matrix;

#[derive(Debug, thiserror::Error)]
pub enum MtxError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn parse_err(line: usize, message: impl Into<String>) -> MtxError {
    MtxError::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MtxFormat {
    Array,
    Coordinate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MtxField {
    Real,
    Integer,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MtxSymmetry {
    General,
    Symmetric,
    Hermitian,
}

struct Header {
    format: MtxFormat,
    field: MtxField,
    symmetry: MtxSymmetry,
}

#[derive(Debug, Clone)]
pub enum MatrixData {
    Real(Matrix<f64>),
    Complex(Matrix<Complex64>),
}

#[derive(Debug, Clone)]
pub enum VectorData {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

fn parse_header(line: &str) -> Result<Header, MtxError> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("%%MatrixMarket") {
        return Err(parse_err(1, "header must start with %%MatrixMarket"));
    }
    if tokens.next().map(str::to_ascii_lowercase).as_deref() != Some("matrix") {
        return Err(parse_err(1, "only the matrix object is supported"));
    }
    let format = match tokens.next().map(str::to_ascii_lowercase).as_deref() {
        Some("array") => MtxFormat::Array,
        Some("coordinate") => MtxFormat::Coordinate,
        other => {
            return Err(parse_err(
                1,
                format!("unknown format {other:?} (expected array or coordinate)"),
            ))
        }
    };
    let field = match tokens.next().map(str::to_ascii_lowercase).as_deref() {
        Some("real") => MtxField::Real,
        Some("integer") => MtxField::Integer,
        Some("complex") => MtxField::Complex,
        Some("pattern") => {
            return Err(parse_err(1, "pattern matrices carry no values"));
        }
        other => {
            return Err(parse_err(
                1,
                format!("unknown field {other:?} (expected real, integer or complex)"),
            ))
        }
    };
    let symmetry = match tokens.next().map(str::to_ascii_lowercase).as_deref() {
        Some("general") | None => MtxSymmetry::General,
        Some("symmetric") => MtxSymmetry::Symmetric,
        Some("hermitian") => MtxSymmetry::Hermitian,
        Some("skew-symmetric") => {
            return Err(parse_err(1, "skew-symmetric matrices are never Hermitian"));
        }
        other => {
            return Err(parse_err(1, format!("unknown symmetry qualifier {other:?}")));
        }
    };
    Ok(Header {
        format,
        field,
        symmetry,
    })
}

struct Lines {
    lines: Vec<(usize, String)>,
    cursor: usize,
}

impl Lines {
    fn next_data(&mut self) -> Option<(usize, &str)> {
        while self.cursor < self.lines.len() {
            let (no, line) = &self.lines[self.cursor];
            self.cursor += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('%') {
                continue;
            }
            return Some((*no, trimmed));
        }
        None
    }

    /// Consume the banner line if the first non-empty line is one.
    /// Comments only start after the banner, so plain `%` lines before it
    /// do not count.
    fn take_banner(&mut self) -> Option<&str> {
        let mut probe = self.cursor;
        while probe < self.lines.len() {
            let (_, line) = &self.lines[probe];
            let trimmed = line.trim();
            if trimmed.is_empty() {
                probe += 1;
                continue;
            }
            if trimmed.starts_with("%%MatrixMarket") {
                self.cursor = probe + 1;
                return Some(trimmed);
            }
            return None;
        }
        None
    }
}

fn read_lines(path: &Path) -> Result<Lines, MtxError> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        lines.push((i + 1, line?));
    }
    Ok(Lines { lines, cursor: 0 })
}

fn parse_f64(token: &str, line: usize) -> Result<f64, MtxError> {
    token
        .parse::<f64>()
        .map_err(|_| parse_err(line, format!("cannot parse number {token:?}")))
}

fn parse_value(
    tokens: &mut std::str::SplitWhitespace<'_>,
    field: MtxField,
    line: usize,
) -> Result<Complex64, MtxError> {
    let re_tok = tokens
        .next()
        .ok_or_else(|| parse_err(line, "missing value"))?;
    let re = parse_f64(re_tok, line)?;
    let im = match field {
        MtxField::Complex => {
            let im_tok = tokens
                .next()
                .ok_or_else(|| parse_err(line, "complex entry needs two numbers"))?;
            parse_f64(im_tok, line)?
        }
        _ => 0.0,
    };
    Ok(Complex64::new(re, im))
}

/// Read a square matrix. Symmetric and Hermitian files carry the lower
/// triangle and are mirrored (with conjugation for Hermitian).
pub fn read_matrix_file(path: &Path) -> Result<MatrixData, MtxError> {
    let mut lines = read_lines(path)?;
    let (first_no, first) = lines
        .next_data()
        .ok_or_else(|| MtxError::Invalid(format!("{}: empty file", path.display())))?;
    if !first.starts_with("%%MatrixMarket") {
        return Err(parse_err(first_no, "matrix files must carry the MatrixMarket header"));
    }
    let header = parse_header(first)?;

    let (size_no, size_line) = lines
        .next_data()
        .ok_or_else(|| MtxError::Invalid("missing size line".into()))?;
    let mut size_tokens = size_line.split_whitespace();
    let rows: usize = size_tokens
        .next()
        .ok_or_else(|| parse_err(size_no, "missing row count"))?
        .parse()
        .map_err(|_| parse_err(size_no, "cannot parse row count"))?;
    let cols: usize = size_tokens
        .next()
        .ok_or_else(|| parse_err(size_no, "missing column count"))?
        .parse()
        .map_err(|_| parse_err(size_no, "cannot parse column count"))?;
    if rows != cols {
        return Err(MtxError::Invalid(format!(
            "operator matrices must be square, got {rows}x{cols}"
        )));
    }
    if rows == 0 {
        return Err(MtxError::Invalid("matrix must be at least 1x1".into()));
    }
    let n = rows;
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    let mut seen = vec![false; n * n];

    match header.format {
        MtxFormat::Array => {
            // Column-major; symmetric/hermitian files store the lower
            // triangle including the diagonal.
            let mut expect: Vec<(usize, usize)> = Vec::new();
            for j in 0..n {
                let start = if header.symmetry == MtxSymmetry::General {
                    0
                } else {
                    j
                };
                for i in start..n {
                    expect.push((i, j));
                }
            }
            for (i, j) in expect {
                let (no, line) = lines
                    .next_data()
                    .ok_or_else(|| MtxError::Invalid("array data ended early".into()))?;
                let mut tokens = line.split_whitespace();
                let v = parse_value(&mut tokens, header.field, no)?;
                if tokens.next().is_some() {
                    return Err(parse_err(no, "trailing tokens after array entry"));
                }
                entries[i * n + j] = v;
                seen[i * n + j] = true;
            }
            if lines.next_data().is_some() {
                return Err(MtxError::Invalid("trailing data after array entries".into()));
            }
        }
        MtxFormat::Coordinate => {
            let nnz: usize = size_tokens
                .next()
                .ok_or_else(|| parse_err(size_no, "coordinate size line needs nnz"))?
                .parse()
                .map_err(|_| parse_err(size_no, "cannot parse nnz"))?;
            for _ in 0..nnz {
                let (no, line) = lines
                    .next_data()
                    .ok_or_else(|| MtxError::Invalid("coordinate data ended early".into()))?;
                let mut tokens = line.split_whitespace();
                let i: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(no, "missing row index"))?
                    .parse()
                    .map_err(|_| parse_err(no, "cannot parse row index"))?;
                let j: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(no, "missing column index"))?
                    .parse()
                    .map_err(|_| parse_err(no, "cannot parse column index"))?;
                if i < 1 || i > n || j < 1 || j > n {
                    return Err(parse_err(no, format!("index ({i}, {j}) out of range")));
                }
                if header.symmetry != MtxSymmetry::General && j > i {
                    return Err(parse_err(
                        no,
                        "symmetric/hermitian files must store the lower triangle",
                    ));
                }
                let v = parse_value(&mut tokens, header.field, no)?;
                if tokens.next().is_some() {
                    return Err(parse_err(no, "trailing tokens after entry"));
                }
                let idx = (i - 1) * n + (j - 1);
                if seen[idx] {
                    return Err(parse_err(no, format!("duplicate entry ({i}, {j})")));
                }
                entries[idx] = v;
                seen[idx] = true;
            }
            if lines.next_data().is_some() {
                return Err(MtxError::Invalid("more entries than the declared nnz".into()));
            }
        }
    }

    // Mirror the stored triangle.
    match header.symmetry {
        MtxSymmetry::General => {}
        MtxSymmetry::Symmetric | MtxSymmetry::Hermitian => {
            let conjugate = header.symmetry == MtxSymmetry::Hermitian;
            for i in 0..n {
                for j in 0..i {
                    let v = entries[i * n + j];
                    entries[j * n + i] = if conjugate { v.conj() } else { v };
                }
                if conjugate && entries[i * n + i].im != 0.0 {
                    return Err(MtxError::Invalid(format!(
                        "hermitian file has a non-real diagonal entry at ({r}, {r})",
                        r = i + 1
                    )));
                }
            }
        }
    }

    let is_complex = header.field == MtxField::Complex;
    if is_complex {
        let rows: Vec<Vec<Complex64>> = (0..n)
            .map(|i| (0..n).map(|j| entries[i * n + j]).collect())
            .collect();
        Ok(MatrixData::Complex(Matrix::from_rows(rows).map_err(
            |e| MtxError::Invalid(e.to_string()),
        )?))
    } else {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| entries[i * n + j].re).collect())
            .collect();
        Ok(MatrixData::Real(Matrix::from_rows(rows).map_err(|e| {
            MtxError::Invalid(e.to_string())
        })?))
    }
}

/// Read a vector: either a MatrixMarket single-column file or, without
/// the banner, plain text with one real number per line.
pub fn read_vector_file(path: &Path) -> Result<VectorData, MtxError> {
    let mut lines = read_lines(path)?;
    let banner = lines
        .lines
        .iter()
        .map(|(_, l)| l.trim())
        .find(|l| !l.is_empty())
        .map(|l| l.starts_with("%%MatrixMarket"))
        .unwrap_or(false);

    if !banner {
        let mut values = Vec::new();
        while let Some((no, line)) = lines.next_data() {
            if line.starts_with('#') {
                continue;
            }
            values.push(parse_f64(line, no)?);
        }
        if values.is_empty() {
            return Err(MtxError::Invalid(format!(
                "{}: no vector entries found",
                path.display()
            )));
        }
        return Ok(VectorData::Real(values));
    }

    let (_, first) = lines.next_data().expect("banner line exists");
    let header = parse_header(first)?;
    if header.symmetry != MtxSymmetry::General {
        return Err(MtxError::Invalid(
            "vector files must use the general qualifier".into(),
        ));
    }
    let (size_no, size_line) = lines
        .next_data()
        .ok_or_else(|| MtxError::Invalid("missing size line".into()))?;
    let mut size_tokens = size_line.split_whitespace();
    let rows: usize = size_tokens
        .next()
        .ok_or_else(|| parse_err(size_no, "missing row count"))?
        .parse()
        .map_err(|_| parse_err(size_no, "cannot parse row count"))?;
    let cols: usize = size_tokens
        .next()
        .ok_or_else(|| parse_err(size_no, "missing column count"))?
        .parse()
        .map_err(|_| parse_err(size_no, "cannot parse column count"))?;
    if cols != 1 {
        return Err(MtxError::Invalid(format!(
            "vectors must be a single column, got {rows}x{cols}"
        )));
    }
    if rows == 0 {
        return Err(MtxError::Invalid("vector must have length >= 1".into()));
    }
    let mut values = vec![Complex64::new(0.0, 0.0); rows];
    match header.format {
        MtxFormat::Array => {
            for value in values.iter_mut() {
                let (no, line) = lines
                    .next_data()
                    .ok_or_else(|| MtxError::Invalid("vector data ended early".into()))?;
                let mut tokens = line.split_whitespace();
                *value = parse_value(&mut tokens, header.field, no)?;
                if tokens.next().is_some() {
                    return Err(parse_err(no, "trailing tokens after vector entry"));
                }
            }
        }
        MtxFormat::Coordinate => {
            let nnz: usize = size_tokens
                .next()
                .ok_or_else(|| parse_err(size_no, "coordinate size line needs nnz"))?
                .parse()
                .map_err(|_| parse_err(size_no, "cannot parse nnz"))?;
            for _ in 0..nnz {
                let (no, line) = lines
                    .next_data()
                    .ok_or_else(|| MtxError::Invalid("vector data ended early".into()))?;
                let mut tokens = line.split_whitespace();
                let i: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(no, "missing row index"))?
                    .parse()
                    .map_err(|_| parse_err(no, "cannot parse row index"))?;
                let j: usize = tokens
                    .next()
                    .ok_or_else(|| parse_err(no, "missing column index"))?
                    .parse()
                    .map_err(|_| parse_err(no, "cannot parse column index"))?;
                if i < 1 || i > rows || j != 1 {
                    return Err(parse_err(no, format!("index ({i}, {j}) out of range")));
                }
                values[i - 1] = parse_value(&mut tokens, header.field, no)?;
            }
        }
    }
    if lines.next_data().is_some() {
        return Err(MtxError::Invalid("trailing data after vector entries".into()));
    }
    if header.field == MtxField::Complex {
        Ok(VectorData::Complex(values))
    } else {
        Ok(VectorData::Real(values.into_iter().map(|z| z.re).collect()))
    }
}

/// 17-significant-digit formatting; round-trips binary64 exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_real_matrix<W: Write>(w: &mut W, m: &Matrix<f64>) -> std::io::Result<()> {
    writeln!(w, "%%MatrixMarket matrix array real general")?;
    writeln!(w, "{} {}", m.n(), m.n())?;
    for j in 0..m.n() {
        for i in 0..m.n() {
            writeln!(w, "{}", fmt_f64(m.get(i, j)))?;
        }
    }
    Ok(())
}

pub fn write_complex_matrix<W: Write>(w: &mut W, m: &Matrix<Complex64>) -> std::io::Result<()> {
    writeln!(w, "%%MatrixMarket matrix array complex general")?;
    writeln!(w, "{} {}", m.n(), m.n())?;
    for j in 0..m.n() {
        for i in 0..m.n() {
            let z = m.get(i, j);
            writeln!(w, "{} {}", fmt_f64(z.re), fmt_f64(z.im))?;
        }
    }
    Ok(())
}

pub fn write_real_vector<W: Write>(w: &mut W, v: &[f64]) -> std::io::Result<()> {
    writeln!(w, "%%MatrixMarket matrix array real general")?;
    writeln!(w, "{} 1", v.len())?;
    for value in v {
        writeln!(w, "{}", fmt_f64(*value))?;
    }
    Ok(())
}

pub fn write_complex_vector<W: Write>(w: &mut W, v: &[Complex64]) -> std::io::Result<()> {
    writeln!(w, "%%MatrixMarket matrix array complex general")?;
    writeln!(w, "{} 1", v.len())?;
    for z in v {
        writeln!(w, "{} {}", fmt_f64(z.re), fmt_f64(z.im))?;
    }
    Ok(())
}
