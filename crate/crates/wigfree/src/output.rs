//! Grid output formats: CSV, JSON and binary PGM heatmaps.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use crate::grid::{GridSpec, Method};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pgm,
}

/// `q,p,W` rows in q-outer order; coordinates in shortest round-trip form,
/// values with 17 significant digits.
pub fn write_csv(out: &mut impl Write, grid: &GridSpec, values: &[Vec<f64>]) -> io::Result<()> {
    writeln!(out, "q,p,W")?;
    for (i, row) in values.iter().enumerate() {
        for (j, w) in row.iter().enumerate() {
            writeln!(out, "{},{},{:.16e}", grid.q(i), grid.p(j), w)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonGrid<'a> {
    grid: &'a GridSpec,
    method: Method,
    q: Vec<f64>,
    p: Vec<f64>,
    values: &'a [Vec<f64>],
}

/// `{"grid": {...}, "method": ..., "q": [...], "p": [...], "values": [[...]]}`
/// with `values[i][j] = W(q_i, p_j)`.
pub fn write_json(
    out: &mut impl Write,
    grid: &GridSpec,
    method: Method,
    values: &[Vec<f64>],
) -> io::Result<()> {
    let doc = JsonGrid {
        grid,
        method,
        q: (0..grid.nq).map(|i| grid.q(i)).collect(),
        p: (0..grid.np).map(|j| grid.p(j)).collect(),
        values,
    };
    serde_json::to_writer(&mut *out, &doc)?;
    writeln!(out)
}

/// Linear map from `[min W, max W]` onto gray levels `0..=255`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrayMap {
    pub min: f64,
    pub max: f64,
}

impl GrayMap {
    pub fn fit(values: &[Vec<f64>]) -> Self {
        let (min, max) = values
            .iter()
            .flatten()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &w| (lo.min(w), hi.max(w)));
        Self { min, max }
    }

    pub fn level(&self, w: f64) -> u8 {
        if self.max > self.min {
            (255.0 * (w - self.min) / (self.max - self.min)).round().clamp(0.0, 255.0) as u8
        } else {
            0
        }
    }
}

/// Binary P5 image, `nq` columns (q increasing to the right) by `np` rows
/// (p increasing upwards). The value mapping is recorded in a comment line.
pub fn write_pgm(out: &mut impl Write, grid: &GridSpec, values: &[Vec<f64>]) -> io::Result<()> {
    let map = GrayMap::fit(values);
    writeln!(out, "P5")?;
    writeln!(
        out,
        "# W = {:e} + level * ({:e} - {:e}) / 255; columns q in [{}, {}], rows p from {} down to {}",
        map.min, map.max, map.min, grid.q_min, grid.q_max, grid.p_max, grid.p_min
    )?;
    writeln!(out, "{} {}", grid.nq, grid.np)?;
    writeln!(out, "255")?;
    let mut pixels = Vec::with_capacity(grid.nq * grid.np);
    for j in (0..grid.np).rev() {
        pixels.extend(values.iter().map(|row| map.level(row[j])));
    }
    out.write_all(&pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> (GridSpec, Vec<Vec<f64>>) {
        let g = GridSpec::new(0.0, 1.0, 0.0, 2.0, 2, 3).unwrap();
        let values = vec![vec![0.0, 1.0, 2.0], vec![3.0, 4.0, -1.0]];
        (g, values)
    }

    #[test]
    fn csv_layout() {
        let (g, v) = sample();
        let mut buf = Vec::new();
        write_csv(&mut buf, &g, &v).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.split('\n').collect();
        assert_eq!(lines[0], "q,p,W");
        assert_eq!(lines[1], "0,0,0.0000000000000000e0");
        assert_eq!(lines[6], "1,2,-1.0000000000000000e0");
        assert_eq!(lines.len(), 8);
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_layout() {
        let (g, v) = sample();
        let mut buf = Vec::new();
        write_json(&mut buf, &g, Method::Closed, &v).unwrap();
        let doc: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["grid"]["nq"], 2);
        assert_eq!(doc["method"], "closed");
        assert_eq!(doc["values"][1][2], -1.0);
        assert_eq!(doc["p"][1], 1.0);
    }

    #[test]
    fn pgm_layout() {
        let (g, v) = sample();
        let mut buf = Vec::new();
        write_pgm(&mut buf, &g, &v).unwrap();
        let header_end = buf.len() - 6;
        let header = std::str::from_utf8(&buf[..header_end]).unwrap();
        assert!(header.starts_with("P5\n# W = -1e0 + level * (4e0 - -1e0) / 255"));
        assert!(header.ends_with("2 3\n255\n"));
        // top row is p = 2: values 2 and -1
        assert_eq!(&buf[header_end..], &[153, 0, 102, 255, 51, 204]);
    }

    #[test]
    fn flat_field_maps_to_black() {
        let map = GrayMap::fit(&[vec![1.0, 1.0]]);
        assert_eq!(map.level(1.0), 0);
    }
}
