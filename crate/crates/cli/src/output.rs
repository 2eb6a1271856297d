//! Run configuration, its hash, and delimited-text tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

/// Everything that determines a run's outputs. The output directory is not
/// part of it: moving the outputs does not change them.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub command: String,
    pub settings: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn new(command: &str) -> Self {
        RunConfig { command: command.to_string(), settings: BTreeMap::new() }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.settings.insert(key.to_string(), value.to_string());
    }

    /// `command; key=value; ...` with keys sorted.
    pub fn canonical(&self) -> String {
        let mut s = self.command.clone();
        for (k, v) in &self.settings {
            let _ = write!(s, "; {k}={v}");
        }
        s
    }

    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.to_string(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len(), "row width in table {}", self.name);
        self.rows.push(row);
    }

    /// Comma-separated, with commas inside a cell replaced by semicolons.
    pub fn to_csv(&self, config: &RunConfig) -> String {
        let clean = |c: &str| c.replace(',', ";").replace('\n', " ");
        let mut out = String::new();
        let _ = writeln!(out, "# config-hash: {}", config.hash());
        let _ = writeln!(out, "# config: {}", config.canonical());
        let _ = writeln!(out, "{}", self.header.join(","));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| clean(c)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Aligned text for the terminal.
    pub fn to_text(&self) -> String {
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.header);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Both,
}

impl Format {
    pub fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }
    pub fn svg(self) -> bool {
        matches!(self, Format::Svg | Format::Both)
    }
}

/// Longer tables are cut short on the terminal; the files are complete.
const ECHO_ROWS: usize = 40;

/// Where a run puts its files.
pub struct Sink {
    pub dir: PathBuf,
    pub format: Format,
    pub config: RunConfig,
    pub quiet: bool,
    pub written: Vec<PathBuf>,
}

impl Sink {
    pub fn new(dir: &Path, format: Format, config: RunConfig, quiet: bool) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Sink { dir: dir.to_path_buf(), format, config, quiet, written: Vec::new() })
    }

    fn path(&self, name: &str, ext: &str) -> PathBuf {
        self.dir.join(format!("{}_{name}.{ext}", self.config.command))
    }

    /// Print the table and, for csv formats, write it.
    pub fn table(&mut self, t: &Table) -> std::io::Result<()> {
        if !self.quiet {
            println!("== {} ==", t.name);
            if t.rows.len() <= ECHO_ROWS {
                print!("{}", t.to_text());
            } else {
                let head = Table { name: t.name.clone(), header: t.header.clone(), rows: t.rows[..ECHO_ROWS].to_vec() };
                print!("{}", head.to_text());
                println!("... {} rows in all", t.rows.len());
            }
        }
        if self.format.csv() {
            let p = self.path(&t.name, "csv");
            fs::write(&p, t.to_csv(&self.config))?;
            self.written.push(p);
        }
        Ok(())
    }

    pub fn svg(&mut self, name: &str, body: &str) -> std::io::Result<()> {
        if self.format.svg() {
            let p = self.path(name, "svg");
            fs::write(&p, body)?;
            self.written.push(p);
        }
        Ok(())
    }

    /// Files that are always written, whatever the format (checkpoints).
    pub fn file(&mut self, name: &str, body: &[u8]) -> std::io::Result<PathBuf> {
        let p = self.dir.join(name);
        fs::write(&p, body)?;
        self.written.push(p.clone());
        Ok(p)
    }
}

/// Shortest round-trip text of a float.
pub fn num(x: f64) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_ignores_insertion_order() {
        let mut a = RunConfig::new("solve");
        a.set("h", 0.1);
        a.set("domain", "disk radius=1");
        let mut b = RunConfig::new("solve");
        b.set("domain", "disk radius=1");
        b.set("h", 0.1);
        assert_eq!(a.hash(), b.hash());
        b.set("h", 0.2);
        assert_ne!(a.hash(), b.hash());
    }

    #[test]
    fn csv_has_hash_header() {
        let mut t = Table::new("x", &["a", "b"]);
        t.push(vec!["1".into(), "2,3".into()]);
        let cfg = RunConfig::new("demo");
        let text = t.to_csv(&cfg);
        assert!(text.starts_with("# config-hash: "));
        assert!(text.ends_with("a,b\n1,2;3\n"));
    }
}
