//! Command-line front end: estimate roots with certificates, compare every
//! method at one target, dump or plot the signed-error wave, expand surds,
//! evaluate segment estimates, and run the built-in verification ledger.
//!
//! Machine output keeps fractions exact: CSV carries numerator and
//! denominator columns, never a decimal value column; decimals appear only
//! in the error-enclosure columns, rendered by truncation at the requested
//! number of digits.

pub mod svg;
pub mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::bracket::bracket;
use crate::certify::{
    certify_bound, method_table, wave_samples, Approximation, BoundKind, MethodTable,
};
use crate::cuberoot::CubeMethod;
use crate::error::{Error, Result};
use crate::exactnum::{
    decimal_string, mixed_string, rat_int, root_enclosure, ten_pow, Int, Rational,
};
use crate::rescale::{rescaled_estimate, RescalePlan, RootMethod};
use crate::segment::{choose_estimate, true_area_enclosure, SegmentChoice, SegmentDims};
use crate::squareroot::{cf_sqrt, SqrtMethod};

/// Parsed invocation: exactly one command per run.
#[derive(Debug, Parser)]
#[command(
    name = "heronian",
    version,
    about = "Exact rational bounds and certificates for classical root-approximation rules"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, ValueEnum, Default)]
pub enum TableFormat {
    #[default]
    Markdown,
    Csv,
}

#[derive(Debug, Clone, ValueEnum, Default)]
pub enum WaveFormat {
    #[default]
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the k-th root of N by one method and certify the bound side.
    Root {
        /// Target integer N >= 1.
        n: String,
        /// Root degree: 2 or 3.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Method name (see `compare` output for the list per degree).
        #[arg(long)]
        method: String,
        /// Rescaling factor s >= 1: run the method at s^k N, divide by s.
        #[arg(long, default_value_t = 1)]
        scale: u64,
        /// Decimal digits for error enclosures.
        #[arg(long, default_value_t = 6)]
        digits: u32,
    },
    /// Compare every method applicable at N, ordered by true closeness.
    Compare {
        /// Target integer N >= 2.
        n: String,
        /// Root degree: 2 or 3.
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
        /// Decimal digits for error enclosures.
        #[arg(long, default_value_t = 6)]
        digits: u32,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signed-error samples of the primary cube rule across whole bands.
    Wave {
        #[arg(long)]
        m_lo: u64,
        #[arg(long)]
        m_hi: u64,
        /// Decimal digits for error enclosures.
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long, value_enum, default_value_t)]
        format: WaveFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in golden-value and identity ledger.
    Verify,
    /// Continued-fraction terms and convergents of sqrt(N).
    Cf {
        /// Non-square integer N >= 2.
        n: String,
        /// How many terms and convergents to produce.
        #[arg(long, default_value_t = 8)]
        count: u32,
    },
    /// Circular-segment area estimates and the crossover rule.
    Segment {
        /// Sagitta (height), as integer, fraction `p/q` or decimal.
        #[arg(long)]
        h: String,
        /// Chord, same formats; must exceed twice the sagitta.
        #[arg(long)]
        b: String,
        /// Also compute a rigorous true-area enclosure at this many digits.
        #[arg(long)]
        digits: Option<u32>,
    },
}

/// Execute one parsed command, writing human or machine output to `out`.
pub fn run(config: RunConfig, out: &mut dyn Write) -> Result<()> {
    match config.command {
        Command::Root {
            n,
            degree,
            method,
            scale,
            digits,
        } => cmd_root(&n, degree, &method, scale, digits, out),
        Command::Compare {
            n,
            degree,
            format,
            digits,
            out: path,
        } => {
            let n = parse_int(&n)?;
            let table = method_table(&n, degree, digits)?;
            let text = match format {
                TableFormat::Csv => table_csv(&table),
                TableFormat::Markdown => table_markdown(&table),
            };
            emit(out, path.as_deref(), &text)
        }
        Command::Wave {
            m_lo,
            m_hi,
            digits,
            format,
            out: path,
        } => {
            if digits < 1 {
                return Err(Error::Usage("digits must be >= 1".into()));
            }
            let samples = wave_samples(m_lo, m_hi, digits)?;
            let text = match format {
                WaveFormat::Csv => wave_csv(&samples),
                WaveFormat::Svg => svg::wave_svg(&samples, m_lo, m_hi),
            };
            emit(out, path.as_deref(), &text)
        }
        Command::Verify => verify::run_ledger(out),
        Command::Cf { n, count } => cmd_cf(&n, count, out),
        Command::Segment { h, b, digits } => cmd_segment(&h, &b, digits, out),
    }
}

fn cmd_root(
    n: &str,
    degree: u32,
    method: &str,
    scale: u64,
    digits: u32,
    out: &mut dyn Write,
) -> Result<()> {
    let n = parse_int(n)?;
    let method = parse_method(method, degree)?;
    let plan = RescalePlan {
        n: n.clone(),
        scale: Int::from(scale),
        method,
        precision_digits: digits,
    };
    let r = rescaled_estimate(&plan)?;
    writeln!(
        out,
        "N = {n}, degree = {degree}, method = {}, scale = {scale}",
        method.name()
    )?;
    if scale > 1 {
        writeln!(
            out,
            "inner: N' = {}, value = {} = {} ({})",
            r.inner_n,
            r.inner.value,
            mixed_string(&r.inner.value),
            describe_bound(&r.inner, degree),
        )?;
        writeln!(out, "raw divided form: {}", r.unreduced)?;
    }
    let final_approx = Approximation {
        method: method.name(),
        value: r.value.clone(),
        bound: r.bound.clone(),
    };
    writeln!(
        out,
        "value = {} = {} ({})",
        r.value,
        mixed_string(&r.value),
        describe_bound(&final_approx, degree),
    )?;
    let enc = root_enclosure(&rat_int(&n), degree, digits);
    let (v_lo, v_hi) = match &r.bound {
        BoundKind::Enclosed { lo, hi } => (lo.clone(), hi.clone()),
        _ => (r.value.clone(), r.value.clone()),
    };
    let err_lo = &v_lo - &enc.hi;
    let err_hi = &v_hi - &enc.lo;
    writeln!(
        out,
        "true root in [{}, {}]; signed error in [{}, {}]",
        decimal_string(&enc.lo, digits),
        decimal_string(&enc.hi, digits),
        decimal_string(&err_lo, digits),
        decimal_string(&err_hi, digits),
    )?;
    Ok(())
}

fn describe_bound(a: &Approximation, degree: u32) -> String {
    let power_word = if degree == 3 { "cube" } else { "square" };
    match &a.bound {
        BoundKind::Enclosed { lo, hi } => {
            format!("ENCLOSED in [{lo}, {hi}]")
        }
        kind => {
            let power = crate::exactnum::pow_r(&a.value, degree);
            format!("{kind}; {power_word} = {power}")
        }
    }
}

fn cmd_cf(n: &str, count: u32, out: &mut dyn Write) -> Result<()> {
    let n = parse_int(n)?;
    let cf = cf_sqrt(&n, count)?;
    let terms: Vec<String> = cf.terms.iter().map(|t| t.to_string()).collect();
    writeln!(out, "sqrt({n}) = [{}; {}]", terms[0], terms[1..].join(", "))?;
    let nr = rat_int(&n);
    for (i, c) in cf.convergents.iter().enumerate() {
        let side = certify_bound(c, &nr, 2).verdict;
        writeln!(
            out,
            "convergent {:>2} = {} = {} ({side})",
            i + 1,
            c,
            mixed_string(c)
        )?;
    }
    Ok(())
}

fn cmd_segment(h: &str, b: &str, digits: Option<u32>, out: &mut dyn Write) -> Result<()> {
    let h = parse_rational(h)?;
    let b = parse_rational(b)?;
    let seg = SegmentDims::new(h, b)?;
    let cmp = choose_estimate(&seg);
    writeln!(
        out,
        "segment: h = {}, b = {}, radius = {}",
        seg.sagitta(),
        seg.chord(),
        seg.radius()
    )?;
    writeln!(
        out,
        "archimedean (4/3 triangle) = {} = {}",
        cmp.archimedean,
        mixed_string(&cmp.archimedean)
    )?;
    writeln!(
        out,
        "traditional h(b+h)/2       = {} = {}",
        cmp.traditional,
        mixed_string(&cmp.traditional)
    )?;
    let rule = match cmp.choice {
        SegmentChoice::Archimedean => "archimedean (b > 3h)",
        SegmentChoice::Traditional => "traditional (b < 3h)",
        SegmentChoice::Tie => "tie (b = 3h exactly)",
    };
    writeln!(out, "preferred: {rule}")?;
    if let Some(d) = digits {
        let e = true_area_enclosure(&seg, d);
        writeln!(
            out,
            "true area in [{}, {}] (width <= 10^-{d})",
            decimal_string(&e.lo, d),
            decimal_string(&e.hi, d),
        )?;
    }
    Ok(())
}

/// CSV for a comparison table. Columns keep fractions exact; the error
/// enclosure columns are truncated decimals at the table's digit setting.
pub fn table_csv(table: &MethodTable) -> String {
    let mut s = String::from("N,m,method,value_num,value_den,bound_kind,err_lo,err_hi\n");
    for row in &table.rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            table.n,
            table.m,
            row.method,
            row.value.numer(),
            row.value.denom(),
            row.bound.label(),
            row.err_lo_dec,
            row.err_hi_dec,
        ));
    }
    s
}

/// Markdown table for a comparison, one row per method in closeness order.
pub fn table_markdown(table: &MethodTable) -> String {
    let mut s = format!(
        "Root of degree {} of N = {} (m = {})\n\n",
        table.degree, table.n, table.m
    );
    s.push_str("| method | value | mixed | bound | signed error |\n");
    s.push_str("|---|---|---|---|---|\n");
    for row in &table.rows {
        s.push_str(&format!(
            "| {} | {} | {} | {} | [{}, {}] |\n",
            row.method,
            row.value,
            row.mixed,
            row.bound.label(),
            row.err_lo_dec,
            row.err_hi_dec,
        ));
    }
    s
}

/// CSV for wave samples, same column layout as the comparison table.
pub fn wave_csv(samples: &[crate::certify::ErrorSample]) -> String {
    let mut s = String::from("N,m,method,value_num,value_den,bound_kind,err_lo,err_hi\n");
    for sample in samples {
        let kind = match sample.sign {
            1 => "upper",
            -1 => "lower",
            _ => "exact",
        };
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            sample.n,
            sample.m,
            sample.method,
            sample.value.numer(),
            sample.value.denom(),
            kind,
            sample.err_lo_dec,
            sample.err_hi_dec,
        ));
    }
    s
}

fn emit(out: &mut dyn Write, path: Option<&std::path::Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, text)?;
            writeln!(out, "wrote {}", p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_int(s: &str) -> Result<Int> {
    Int::from_str(s.trim()).map_err(|_| Error::Usage(format!("not an integer: {s:?}")))
}

fn parse_method(name: &str, degree: u32) -> Result<RootMethod> {
    match degree {
        3 => CubeMethod::parse(name).map(RootMethod::Cube).ok_or_else(|| {
            let names: Vec<_> = CubeMethod::ALL.iter().map(|m| m.name()).collect();
            Error::Usage(format!(
                "unknown cube method {name:?}; expected one of {}",
                names.join(", ")
            ))
        }),
        2 => SqrtMethod::parse(name).map(RootMethod::Sqrt).ok_or_else(|| {
            let names: Vec<_> = SqrtMethod::ALL.iter().map(|m| m.name()).collect();
            Error::Usage(format!(
                "unknown square method {name:?}; expected one of {}",
                names.join(", ")
            ))
        }),
        other => Err(Error::Usage(format!("degree must be 2 or 3, got {other}"))),
    }
}

/// Accepts `p/q`, a plain integer, or a decimal like `1.25` / `-0.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Usage(format!("not a rational: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num = Int::from_str(num.trim()).map_err(|_| bad())?;
        let den = Int::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Usage("zero denominator".into()));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = s.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        let whole: Int = if whole.is_empty() {
            Int::zero()
        } else {
            Int::from_str(whole).map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let scale = ten_pow(frac.len() as u32);
        let frac = Int::from_str(frac).map_err(|_| bad())?;
        let magnitude = Rational::new(whole * &scale + frac, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    Ok(Rational::from(Int::from_str(s).map_err(|_| bad())?))
}

/// Exact sign of the classification quantity `N^2 - m^3 (m+1)^3` at `n`,
/// used by the ledger and the wave tests.
pub fn classification_sign(n: &Int) -> Result<i8> {
    let br = bracket(n, 3)?;
    let pivot = crate::exactnum::pow_i(&br.m, 3) * crate::exactnum::pow_i(&(&br.m + 1), 3);
    Ok(match (n * n).cmp(&pivot) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    })
}
