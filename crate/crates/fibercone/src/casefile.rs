//! The line-oriented case-file format.
//!
//! ```text
//! # Example: the maximal ideal of k[[t^4,t^5,t^11]]
//! semigroup: 4 5 11
//! char: 32003
//! ideal: t^4, t^5, t^11
//! reduction: t^4
//! option seed=7
//! ```

use std::fmt;

use fibercone_core::{CaseSpec, Options};

/// Environment variable overriding the default characteristic.
pub const CHAR_ENV: &str = "FIBERCONE_CHAR";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFile {
    pub case: CaseSpec,
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseFileError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for CaseFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for CaseFileError {}

/// Default characteristic: `FIBERCONE_CHAR` if set, otherwise 32003.
pub fn default_characteristic() -> Result<u64, CaseFileError> {
    match std::env::var(CHAR_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CaseFileError {
            line: 0,
            message: format!("{CHAR_ENV}={v:?} is not an integer"),
        }),
        Err(_) => Ok(fibercone_core::field::DEFAULT_CHARACTERISTIC as u64),
    }
}

pub fn parse(text: &str, default_char: u64) -> Result<CaseFile, CaseFileError> {
    let mut semigroup = None;
    let mut characteristic = default_char;
    let mut ideal: Option<Vec<String>> = None;
    let mut reductions = Vec::new();
    let mut options = Options::default();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| CaseFileError {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("option") {
            let (name, value) = rest
                .trim()
                .split_once('=')
                .ok_or_else(|| err(format!("expected option <name>=<value>, got {line:?}")))?;
            set_option(&mut options, name.trim(), value.trim()).map_err(err)?;
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected <key>: <value>, got {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "semigroup" => {
                let gens = value
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u32>().map_err(|_| err(format!("bad generator {s:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                semigroup = Some(gens);
            }
            "char" => {
                characteristic = value
                    .parse()
                    .map_err(|_| err(format!("bad characteristic {value:?}")))?;
            }
            "ideal" => {
                let gens: Vec<String> = value
                    .split(',')
                    .map(|s| s.trim().to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
                if gens.is_empty() {
                    return Err(err("ideal needs at least one generator".into()));
                }
                ideal = Some(gens);
            }
            "reduction" => {
                if value.is_empty() {
                    return Err(err("empty reduction".into()));
                }
                reductions.push(value.to_string());
            }
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }
    let missing = |what: &str| CaseFileError {
        line: 0,
        message: format!("missing {what} line"),
    };
    Ok(CaseFile {
        case: CaseSpec {
            semigroup: semigroup.ok_or_else(|| missing("semigroup"))?,
            characteristic,
            ideal: ideal.ok_or_else(|| missing("ideal"))?,
            reductions,
        },
        options,
    })
}

fn set_option(options: &mut Options, name: &str, value: &str) -> Result<(), String> {
    let int = || value.parse::<u64>().map_err(|_| format!("option {name}: bad value {value:?}"));
    match name {
        "r_bound" | "rbound" => options.r_bound = int()? as u32,
        "attempts" => options.attempts = int()? as u32,
        "seed" => options.seed = int()?,
        "truncation" => options.truncation = Some(int()? as u32),
        "comparisons" => options.comparisons = int()? as usize,
        "max_doublings" => options.max_doublings = int()? as u32,
        _ => return Err(format!("unknown option {name:?}")),
    }
    Ok(())
}

/// Renders a case back into the file format.
pub fn render(file: &CaseFile) -> String {
    let c = &file.case;
    let o = &file.options;
    let mut out = String::new();
    let gens: Vec<String> = c.semigroup.iter().map(|g| g.to_string()).collect();
    out.push_str(&format!("semigroup: {}\n", gens.join(" ")));
    out.push_str(&format!("char: {}\n", c.characteristic));
    out.push_str(&format!("ideal: {}\n", c.ideal.join(", ")));
    for r in &c.reductions {
        out.push_str(&format!("reduction: {r}\n"));
    }
    let d = Options::default();
    if o.r_bound != d.r_bound {
        out.push_str(&format!("option r_bound={}\n", o.r_bound));
    }
    if o.attempts != d.attempts {
        out.push_str(&format!("option attempts={}\n", o.attempts));
    }
    if o.seed != d.seed {
        out.push_str(&format!("option seed={}\n", o.seed));
    }
    if let Some(n) = o.truncation {
        out.push_str(&format!("option truncation={n}\n"));
    }
    if o.comparisons != d.comparisons {
        out.push_str(&format!("option comparisons={}\n", o.comparisons));
    }
    if o.max_doublings != d.max_doublings {
        out.push_str(&format!("option max_doublings={}\n", o.max_doublings));
    }
    out
}
