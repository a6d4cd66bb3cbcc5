//! On-disk form of the LR cache: UTF-8 lines `mu;nu;theta;coeff`, sorted.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use schurlc::{LrCache, Partition};

use crate::CliError;

/// One line of the cache file.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Record {
    pub mu: Partition,
    pub nu: Partition,
    pub theta: Partition,
    pub coeff: u64,
}

impl Record {
    pub fn parse(line: &str) -> Result<Record, String> {
        let fields: Vec<&str> = line.split(';').collect();
        let [mu, nu, theta, coeff] = fields[..] else {
            return Err(format!("expected 4 fields, found {}", fields.len()));
        };
        let part = |s: &str| s.parse::<Partition>().map_err(|e| e.to_string());
        let record = Record {
            mu: part(mu)?,
            nu: part(nu)?,
            theta: part(theta)?,
            coeff: coeff
                .trim()
                .parse()
                .map_err(|_| format!("bad coefficient `{}`", coeff.trim()))?,
        };
        if record.theta.size() != record.mu.size() + record.nu.size() {
            return Err(format!("|{}| is not |{}| + |{}|", record.theta, record.mu, record.nu));
        }
        if record.coeff == 0 {
            return Err("zero coefficients are never stored".into());
        }
        Ok(record)
    }
}

impl std::fmt::Display for Record {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{};{};{};{}", self.mu, self.nu, self.theta, self.coeff)
    }
}

pub fn parse(text: &str) -> Result<Vec<Record>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(index, line)| {
            Record::parse(line).map_err(|reason| CliError::Corrupt {
                line: index + 1,
                reason,
            })
        })
        .collect()
}

pub fn render(records: &[Record]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

/// Every product in the cache as records, sorted.
pub fn records(cache: &LrCache) -> Vec<Record> {
    let mut out: Vec<Record> = cache
        .snapshot()
        .into_iter()
        .flat_map(|((mu, nu), terms)| {
            terms
                .iter()
                .map(|(theta, coeff)| Record {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    theta: theta.clone(),
                    coeff: *coeff,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out
}

/// Loads `path` into `cache`. A missing file is an empty cache.
pub fn load(path: &Path, cache: &LrCache) -> Result<usize, CliError> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(CliError::Io(path.display().to_string(), e)),
    };
    let mut products: BTreeMap<(Partition, Partition), Vec<(Partition, u64)>> = BTreeMap::new();
    for r in parse(&text)? {
        products.entry((r.mu, r.nu)).or_default().push((r.theta, r.coeff));
    }
    let count = products.len();
    for ((mu, nu), terms) in products {
        cache.insert_product(&mu, &nu, terms);
    }
    Ok(count)
}

/// Writes the cache through a sibling temporary file so a crash never
/// leaves a truncated cache behind.
pub fn store(path: &Path, cache: &LrCache) -> Result<(), CliError> {
    let io_err = |e| CliError::Io(path.display().to_string(), e);
    let tmp = path.with_extension("tmp");
    let mut file = fs::File::create(&tmp).map_err(io_err)?;
    file.write_all(render(&records(cache)).as_bytes()).map_err(io_err)?;
    file.sync_all().map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}
