//! Sweep values: comma-separated items, each a number or `start:end:step`.

use anyhow::{bail, Context};

fn steps(start: f64, end: f64, step: f64) -> anyhow::Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !end.is_finite() || end < start {
        bail!("range {start}:{end}:{step} needs start <= end and step > 0");
    }
    let count = ((end - start) / step + 1e-9).floor() as u64;
    if count > 1_000_000 {
        bail!("range {start}:{end}:{step} has too many points");
    }
    // Rounded to 12 significant digits so 2.1 + 3·0.1 prints as 2.4.
    Ok((0..=count)
        .map(|k| {
            let x = start + k as f64 * step;
            format!("{x:.11e}").parse().expect("formatted float parses")
        })
        .collect())
}

pub fn floats(spec: &str) -> anyhow::Result<Vec<f64>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        let num = |s: &str| -> anyhow::Result<f64> {
            s.trim()
                .parse()
                .with_context(|| format!("`{s}` is not a number"))
        };
        match parts.as_slice() {
            [x] => out.push(num(x)?),
            [a, b, s] => out.extend(steps(num(a)?, num(b)?, num(s)?)?),
            _ => bail!("`{item}` is neither a number nor start:end:step"),
        }
    }
    if out.is_empty() {
        bail!("empty value list");
    }
    Ok(out)
}

pub fn integers(spec: &str) -> anyhow::Result<Vec<u64>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        let num = |s: &str| -> anyhow::Result<u64> {
            s.trim()
                .parse()
                .with_context(|| format!("`{s}` is not a non-negative integer"))
        };
        match parts.as_slice() {
            [x] => out.push(num(x)?),
            [a, b] => out.extend(num(a)?..=num(b)?),
            [a, b, s] => {
                let step = num(s)?;
                if step == 0 {
                    bail!("step must be positive in `{item}`");
                }
                out.extend((num(a)?..=num(b)?).step_by(step as usize));
            }
            _ => bail!("`{item}` is neither an integer nor start:end[:step]"),
        }
    }
    if out.is_empty() {
        bail!("empty value list");
    }
    Ok(out)
}
