//! Parameter axes: a single value, an explicit list, or an evenly spaced range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    Value(f64),
    List(Vec<f64>),
    Range { start: f64, stop: f64, count: usize },
}

impl Axis {
    /// Points in declaration order. Ranges include both ends.
    pub fn values(&self) -> Vec<f64> {
        match self {
            Axis::Value(v) => vec![*v],
            Axis::List(v) => v.clone(),
            Axis::Range { start, stop, count } => spaced(*start, *stop, *count),
        }
    }

    pub fn check(&self) -> Result<(), String> {
        match self {
            Axis::List(v) if v.is_empty() => return Err("empty list".into()),
            Axis::Range { count: 0, .. } => return Err("count must be >= 1".into()),
            _ => {}
        }
        match self.values().iter().find(|v| !v.is_finite()) {
            Some(v) => Err(format!("non-finite value {v}")),
            None => Ok(()),
        }
    }
}

fn spaced(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..count)
            .map(|i| {
                if i + 1 == count {
                    stop
                } else {
                    start + (stop - start) * (i as f64 / (count - 1) as f64)
                }
            })
            .collect(),
    }
}

/// Integer axis for chain lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SizeAxis {
    Value(usize),
    List(Vec<usize>),
    Range {
        start: usize,
        stop: usize,
        count: usize,
    },
}

impl SizeAxis {
    /// Points in declaration order; range points are rounded and deduplicated.
    pub fn values(&self) -> Vec<usize> {
        match self {
            SizeAxis::Value(v) => vec![*v],
            SizeAxis::List(v) => v.clone(),
            SizeAxis::Range { start, stop, count } => {
                let mut out: Vec<usize> = spaced(*start as f64, *stop as f64, *count)
                    .into_iter()
                    .map(|x| x.round() as usize)
                    .collect();
                out.dedup();
                out
            }
        }
    }

    pub fn check(&self) -> Result<(), String> {
        match self {
            SizeAxis::List(v) if v.is_empty() => Err("empty list".into()),
            SizeAxis::Range { count: 0, .. } => Err("count must be >= 1".into()),
            _ => Ok(()),
        }
    }
}

fn parse_axis<T: FromStr>(s: &str) -> Result<(Vec<T>, Option<usize>), String>
where
    T::Err: fmt::Display,
{
    let item = |x: &str| x.trim().parse::<T>().map_err(|e| format!("'{}': {e}", x.trim()));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.len() {
        1 => Ok((s.split(',').map(item).collect::<Result<_, _>>()?, None)),
        3 => {
            let count = parts[2]
                .trim()
                .parse::<usize>()
                .map_err(|e| format!("count '{}': {e}", parts[2].trim()))?;
            Ok((vec![item(parts[0])?, item(parts[1])?], Some(count)))
        }
        _ => Err(format!("expected a value, a comma list or start:stop:count, got '{s}'")),
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match parse_axis::<f64>(s)? {
            (v, Some(count)) => Axis::Range {
                start: v[0],
                stop: v[1],
                count,
            },
            (v, None) if v.len() == 1 => Axis::Value(v[0]),
            (v, None) => Axis::List(v),
        })
    }
}

impl FromStr for SizeAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match parse_axis::<usize>(s)? {
            (v, Some(count)) => SizeAxis::Range {
                start: v[0],
                stop: v[1],
                count,
            },
            (v, None) if v.len() == 1 => SizeAxis::Value(v[0]),
            (v, None) => SizeAxis::List(v),
        })
    }
}
