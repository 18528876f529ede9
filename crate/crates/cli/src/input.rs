//! Reading operands from files or inline literals.

use std::path::Path;

use clap::ValueEnum;
use hyperlattice::{
    CellFormalSum, CornerSumHypermatrix, Error, Hypermatrix, LatinSquare, Matrix, MonotoneHypertriangle, Result, Tagged,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Whitespace-separated symbols, one row per line.
    Latin,
    /// Kind-tagged JSON.
    Json,
    /// Grid notation: each cell a formal sum such as `1-2+3`.
    Grid,
}

/// A parsed operand, keeping the kind it was written as.
#[derive(Clone, Debug)]
pub enum Operand {
    Latin(LatinSquare),
    Hyper(Hypermatrix),
    CornerSum(CornerSumHypermatrix),
    Matrix(Matrix),
    Triangle(MonotoneHypertriangle),
}

impl Operand {
    pub fn kind(&self) -> &'static str {
        match self {
            Operand::Latin(_) => "latin",
            Operand::Hyper(_) => "hypermatrix",
            Operand::CornerSum(_) => "corner-sum",
            Operand::Matrix(_) => "matrix",
            Operand::Triangle(_) => "triangle",
        }
    }

    /// The operand as a hypermatrix; corner sums and triangles are inverted.
    pub fn hypermatrix(&self) -> Result<Hypermatrix> {
        match self {
            Operand::Latin(l) => Ok(l.to_hypermatrix()),
            Operand::Hyper(a) => Ok(a.clone()),
            Operand::CornerSum(c) => Ok(c.to_hypermatrix()),
            Operand::Triangle(t) => hyperlattice::from_triangle(t),
            Operand::Matrix(_) => Err(Error::Dimension("expected a three-dimensional operand, got a matrix".into())),
        }
    }

    pub fn corner_sum(&self) -> Result<CornerSumHypermatrix> {
        match self {
            Operand::CornerSum(c) => Ok(c.clone()),
            other => CornerSumHypermatrix::from_hypermatrix(&other.hypermatrix()?),
        }
    }
}

/// Reads `source` as a file when such a path exists, otherwise as an inline literal.
/// In literals `/` separates rows.
pub fn read_operand(source: &str, format: Option<Format>) -> Result<Operand> {
    let path = Path::new(source);
    let (text, from_extension) = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {source}: {e}")))?;
        let ext = match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Some(Format::Json),
            Some("latin") => Some(Format::Latin),
            Some("grid") => Some(Format::Grid),
            _ => None,
        };
        (text, ext)
    } else {
        (inline_rows(source), None)
    };
    let format = format.or(from_extension).unwrap_or_else(|| sniff(&text));
    parse(&text, format)
}

/// Splits an inline literal at `/`. When there are `n` rows, each a run of
/// exactly `n` digits with no spaces, the digits become separate cells, so
/// `123/231/312` reads as a Latin square.
fn inline_rows(source: &str) -> String {
    let rows: Vec<&str> = source.split('/').map(str::trim).collect();
    let compact = rows.len() < 10 && rows.iter().all(|r| r.len() == rows.len() && r.bytes().all(|b| b.is_ascii_digit()));
    if compact {
        rows.iter().map(|r| r.chars().map(String::from).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
    } else {
        rows.join("\n")
    }
}

fn sniff(text: &str) -> Format {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        Format::Json
    } else if trimmed.split_whitespace().all(|cell| cell.parse::<usize>().is_ok()) {
        Format::Latin
    } else {
        Format::Grid
    }
}

fn parse(text: &str, format: Format) -> Result<Operand> {
    match format {
        Format::Latin => LatinSquare::parse_text(text).map(Operand::Latin),
        Format::Grid => Ok(Operand::Hyper(CellFormalSum::parse(text)?.to_hypermatrix())),
        Format::Json => {
            let tagged = Tagged::from_json(text)?;
            Ok(match tagged {
                Tagged::Latin { .. } => Operand::Latin(tagged.try_into()?),
                Tagged::Hypermatrix { .. } => Operand::Hyper(tagged.try_into()?),
                Tagged::CornerSum { .. } => Operand::CornerSum(tagged.try_into()?),
                Tagged::Matrix { .. } => Operand::Matrix(tagged.try_into()?),
                Tagged::Triangle { .. } => Operand::Triangle(tagged.try_into()?),
                Tagged::CornerSumMatrix { .. } => {
                    let c: hyperlattice::CornerSumMatrix = tagged.try_into()?;
                    Operand::Matrix(hyperlattice::sigma_inverse(&c)?)
                }
            })
        }
    }
}

/// Raw symbol rows of a grid whose cells are all plain integers, for Latin diagnostics.
pub fn symbol_grid(source: &str) -> Option<Matrix> {
    let text = if Path::new(source).is_file() { std::fs::read_to_string(source).ok()? } else { inline_rows(source) };
    let rows: Vec<Vec<i32>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(|c| c.parse::<i32>().ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    Matrix::from_rows(&rows).ok()
}
