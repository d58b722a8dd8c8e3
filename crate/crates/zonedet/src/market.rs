//! Matrix Market coordinate I/O.
//!
//! Reads `real`/`complex` coordinate files with `general`, `symmetric` or
//! `hermitian` symmetry (symmetry is expanded to general storage on read).
//! Writing always emits `complex general` with enough digits to round-trip
//! every value exactly.

use crate::error::{Error, Result};
use crate::sparse::ComplexSparseMatrix;
use num_complex::Complex64;
use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Field {
    Real,
    Complex,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    Hermitian,
}

fn parse_header(line: &str) -> Result<(Field, Symmetry)> {
    let err = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
    let mut tok = line.split_whitespace();
    match tok.next() {
        Some("%%MatrixMarket") => {}
        _ => return Err(err("header must start with %%MatrixMarket")),
    }
    match tok.next().map(str::to_ascii_lowercase).as_deref() {
        Some("matrix") => {}
        Some(other) => return Err(Error::UnsupportedFormat(format!("object '{other}'"))),
        None => return Err(err("missing object token")),
    }
    match tok.next().map(str::to_ascii_lowercase).as_deref() {
        Some("coordinate") => {}
        Some(other) => return Err(Error::UnsupportedFormat(format!("format '{other}'"))),
        None => return Err(err("missing format token")),
    }
    let field = match tok.next().map(str::to_ascii_lowercase).as_deref() {
        Some("real") => Field::Real,
        Some("complex") => Field::Complex,
        Some(other) => return Err(Error::UnsupportedFormat(format!("field '{other}'"))),
        None => return Err(err("missing field token")),
    };
    let symmetry = match tok.next().map(str::to_ascii_lowercase).as_deref() {
        Some("general") => Symmetry::General,
        Some("symmetric") => Symmetry::Symmetric,
        Some("hermitian") => Symmetry::Hermitian,
        Some(other) => return Err(Error::UnsupportedFormat(format!("symmetry '{other}'"))),
        None => return Err(err("missing symmetry token")),
    };
    Ok((field, symmetry))
}

/// Parse Matrix Market coordinate text into a sparse matrix.
pub fn read_matrix_market(text: &str) -> Result<ComplexSparseMatrix> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let (field, symmetry) = parse_header(header)?;

    // size line: first non-comment, non-blank line
    let mut size: Option<(usize, usize, usize, usize)> = None;
    for (idx, line) in &mut lines {
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let lineno = idx + 1;
        let nums: Vec<&str> = t.split_whitespace().collect();
        if nums.len() != 3 {
            return Err(Error::Parse { line: lineno, msg: "size line must be 'rows cols nnz'".into() });
        }
        let rows: usize = nums[0]
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse row count".into() })?;
        let cols: usize = nums[1]
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse column count".into() })?;
        let nnz: usize = nums[2]
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse non-zero count".into() })?;
        if rows != cols {
            return Err(Error::UnsupportedFormat(format!("rectangular matrix {rows}x{cols}")));
        }
        if rows == 0 {
            return Err(Error::Parse { line: lineno, msg: "matrix order must be positive".into() });
        }
        size = Some((rows, cols, nnz, lineno));
        break;
    }
    let (n, _, nnz, _) = size.ok_or(Error::Parse { line: 1, msg: "missing size line".into() })?;

    let mut triples: Vec<(usize, usize, Complex64)> = Vec::with_capacity(2 * nnz);
    let mut seen = 0usize;
    for (idx, line) in lines {
        let t = line.trim();
        if t.is_empty() || t.starts_with('%') {
            continue;
        }
        let lineno = idx + 1;
        if seen == nnz {
            return Err(Error::Parse { line: lineno, msg: "more entries than declared".into() });
        }
        let mut tok = t.split_whitespace();
        let row: usize = tok
            .next()
            .ok_or(Error::Parse { line: lineno, msg: "missing row index".into() })?
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse row index".into() })?;
        let col: usize = tok
            .next()
            .ok_or(Error::Parse { line: lineno, msg: "missing column index".into() })?
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse column index".into() })?;
        let re: f64 = tok
            .next()
            .ok_or(Error::Parse { line: lineno, msg: "missing value".into() })?
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse real part".into() })?;
        let im: f64 = match field {
            Field::Real => 0.0,
            Field::Complex => tok
                .next()
                .ok_or(Error::Parse { line: lineno, msg: "missing imaginary part".into() })?
                .parse()
                .map_err(|_| Error::Parse { line: lineno, msg: "cannot parse imaginary part".into() })?,
        };
        if tok.next().is_some() {
            return Err(Error::Parse { line: lineno, msg: "trailing tokens on entry line".into() });
        }
        if row == 0 || col == 0 || row > n || col > n {
            return Err(Error::Parse { line: lineno, msg: format!("index ({row}, {col}) out of range") });
        }
        let (r, c) = (row - 1, col - 1);
        let v = Complex64::new(re, im);
        triples.push((r, c, v));
        if r != c {
            match symmetry {
                Symmetry::General => {}
                Symmetry::Symmetric => triples.push((c, r, v)),
                Symmetry::Hermitian => triples.push((c, r, v.conj())),
            }
        }
        seen += 1;
    }
    if seen != nnz {
        return Err(Error::Parse { line: 0, msg: format!("declared {nnz} entries, found {seen}") });
    }
    ComplexSparseMatrix::from_entries(n, &triples)
}

/// Serialize a matrix as `complex general` coordinate text. The given
/// comment lines (typically generator provenance) are written after the
/// header, each prefixed with `%`.
pub fn write_matrix_market(m: &ComplexSparseMatrix, comments: &[&str]) -> String {
    let mut out = String::new();
    out.push_str("%%MatrixMarket matrix coordinate complex general\n");
    for comment in comments {
        let _ = writeln!(out, "% {comment}");
    }
    let _ = writeln!(out, "{} {} {}", m.order(), m.order(), m.nnz());
    for (r, c, v) in m.iter() {
        // `{}` for f64 prints the shortest representation that parses back
        // to the same bits, so read(write(m)) == m exactly.
        let _ = writeln!(out, "{} {} {} {}", r + 1, c + 1, v.re, v.im);
    }
    out
}
