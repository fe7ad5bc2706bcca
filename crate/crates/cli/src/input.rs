use anyhow::{bail, Context, Result};
use freqnorm::gen::{generate, DistFamily, DistSpec};
use freqnorm::{build_histogram, Histogram};

use crate::SourceArgs;

/// Parse whitespace-separated non-negative integers.
pub fn parse_counts(text: &str) -> Result<Vec<u64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .with_context(|| format!("bad count {tok:?}"))
        })
        .collect()
}

/// Resolve a generator family name plus its parameter flags.
pub fn parse_family(name: &str, p: Option<f64>, s: Option<f64>) -> Result<DistFamily> {
    Ok(match name {
        "uniform" => DistFamily::Uniform,
        "geometric" => DistFamily::Geometric {
            p: p.context("--dist geometric requires --p")?,
        },
        "zipf" => DistFamily::Zipf {
            s: s.context("--dist zipf requires --s")?,
        },
        "gaussian" => DistFamily::Gaussian,
        "sparse_heavy" => DistFamily::SparseHeavy,
        other => bail!("unknown distribution {other:?}"),
    })
}

/// A sweep-style label: `uniform | geom<p> | zipf<s> | gaussian | sparse`.
pub fn parse_label(label: &str) -> Result<DistFamily> {
    Ok(match label {
        "uniform" => DistFamily::Uniform,
        "gaussian" => DistFamily::Gaussian,
        "sparse" | "sparse_heavy" => DistFamily::SparseHeavy,
        _ if label.starts_with("geom") => DistFamily::Geometric {
            p: label["geom".len()..]
                .parse()
                .with_context(|| format!("bad geometric label {label:?}"))?,
        },
        _ if label.starts_with("zipf") => DistFamily::Zipf {
            s: label["zipf".len()..]
                .parse()
                .with_context(|| format!("bad zipf label {label:?}"))?,
        },
        other => bail!("unknown distribution label {other:?}"),
    })
}

/// Load the histogram named by exactly one source flag.
pub fn load(source: &SourceArgs) -> Result<Histogram> {
    if let Some(text) = &source.counts {
        return Ok(build_histogram(parse_counts(text)?)?);
    }
    if let Some(path) = &source.counts_file {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(build_histogram(parse_counts(&text)?)?);
    }
    if let Some(path) = &source.bytes_file {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        return Ok(freqnorm::gen::byte_histogram(&bytes)?);
    }
    if let Some(name) = &source.dist {
        let family = parse_family(name, source.p, source.s)?;
        let spec = DistSpec {
            family,
            support: source.r.context("--dist requires --r")?,
            total: source.total.context("--dist requires --N")?,
        };
        return Ok(generate(&spec)?);
    }
    bail!("one input source is required");
}

/// Parse a comma-separated list with a per-item parser.
pub fn parse_list<T>(text: &str, what: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    text.split(',')
        .map(str::trim)
        .filter(|tok| !tok.is_empty())
        .map(|tok| parse(tok).with_context(|| format!("bad {what} {tok:?}")))
        .collect()
}
