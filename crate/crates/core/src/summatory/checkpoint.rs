//! Line-oriented checkpoint files.
//!
//! ```text
//! mertens-checkpoint 1
//! kind psi
//! mode rigorous
//! stride 10000
//! 10000 <lo> <hi> fixed:<lo>:<hi>
//! ```
//!
//! Record fields are tab-separated. Records are `x`, the value enclosure and the raw running state. A run
//! resumes from the last complete record; a torn final line is ignored.

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use super::{Accumulator, Checkpoint, Mode, SeriesKind};
use crate::error::{Error, Result};

const MAGIC: &str = "mertens-checkpoint";
const VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckpointHeader {
    pub kind: SeriesKind,
    pub mode: Mode,
    pub stride: u64,
}

impl CheckpointHeader {
    fn render(&self) -> String {
        format!(
            "{MAGIC} {VERSION}\nkind {}\nmode {}\nstride {}\n",
            self.kind,
            self.mode.name(),
            self.stride
        )
    }
}

/// Checkpoint log opened for appending.
pub struct CheckpointFile {
    path: PathBuf,
    writer: BufWriter<File>,
}

impl CheckpointFile {
    /// Opens `path`, creating it with `header` if absent. An existing file
    /// must carry the same header; its complete records are returned.
    pub fn open(path: &Path, header: CheckpointHeader) -> Result<(Self, Vec<Checkpoint>)> {
        let existing = if path.exists() {
            let (found, records) = read(path)?;
            if found != header {
                return Err(Error::IncompatibleCheckpoint(format!(
                    "{} was written for {} / {} / stride {}, requested {} / {} / stride {}",
                    path.display(),
                    found.kind,
                    found.mode.name(),
                    found.stride,
                    header.kind,
                    header.mode.name(),
                    header.stride
                )));
            }
            records
        } else {
            let mut f = File::create(path)?;
            f.write_all(header.render().as_bytes())?;
            f.sync_all()?;
            Vec::new()
        };
        let file = OpenOptions::new().read(true).write(true).open(path)?;
        // Drop any torn tail so new records start on a fresh line.
        let keep = complete_length(path)?;
        file.set_len(keep)?;
        let mut writer = BufWriter::new(file);
        writer.seek(SeekFrom::End(0))?;
        Ok((
            CheckpointFile {
                path: path.to_path_buf(),
                writer,
            },
            existing,
        ))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&mut self, c: &Checkpoint) -> Result<()> {
        let e = c.value.to_enclosure();
        writeln!(self.writer, "{}\t{}\t{}\t{}", c.x, e.lo(), e.hi(), c.state.encode())?;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        self.writer.flush()?;
        Ok(())
    }
}

impl Drop for CheckpointFile {
    fn drop(&mut self) {
        let _ = self.writer.flush();
    }
}

/// Length of the file up to its last newline.
fn complete_length(path: &Path) -> Result<u64> {
    let bytes = std::fs::read(path)?;
    Ok(bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i as u64 + 1))
}

/// Reads a checkpoint file: header and complete records.
pub fn read(path: &Path) -> Result<(CheckpointHeader, Vec<Checkpoint>)> {
    let raw = std::fs::read_to_string(path)?;
    let torn = !raw.is_empty() && !raw.ends_with('\n');
    let mut lines: Vec<&str> = raw.lines().collect();
    if torn {
        lines.pop();
    }
    let bad = |what: &str| Error::Checkpoint(format!("{}: {what}", path.display()));
    let mut it = lines.into_iter();
    let magic = it.next().ok_or_else(|| bad("empty file"))?;
    match magic.split_once(' ') {
        Some((MAGIC, v)) if v == VERSION.to_string() => {}
        Some((MAGIC, v)) => {
            return Err(Error::IncompatibleCheckpoint(format!(
                "{}: format version {v}, expected {VERSION}",
                path.display()
            )))
        }
        _ => return Err(bad("not a checkpoint file")),
    }
    let mut field = |name: &str| -> Result<String> {
        let line = it.next().ok_or_else(|| bad("truncated header"))?;
        match line.split_once(' ') {
            Some((k, v)) if k == name => Ok(v.to_string()),
            _ => Err(bad(&format!("expected `{name}` header line"))),
        }
    };
    let kind: SeriesKind = field("kind")?.parse()?;
    let mode: Mode = field("mode")?.parse()?;
    let stride: u64 = field("stride")?.parse().map_err(|_| bad("bad stride"))?;
    let header = CheckpointHeader { kind, mode, stride };
    let mut records: Vec<Checkpoint> = Vec::new();
    for line in it {
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 4 {
            return Err(bad(&format!("malformed record {line:?}")));
        }
        let x: u64 = cols[0].parse().map_err(|_| bad("bad x"))?;
        let state: Accumulator = cols[3].parse()?;
        if records.last().is_some_and(|p| p.x >= x) {
            return Err(bad("records are not increasing"));
        }
        records.push(Checkpoint {
            x,
            value: state.value(x),
            state,
        });
    }
    Ok((header, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summatory::{ScanConfig, Summatory};

    fn header() -> CheckpointHeader {
        CheckpointHeader {
            kind: SeriesKind::Psi,
            mode: Mode::Rigorous,
            stride: 100,
        }
    }

    #[test]
    fn write_read_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("psi.ckpt");
        let s = Summatory::new(ScanConfig::default().with_segment_size(128));
        {
            let (mut f, old) = CheckpointFile::open(&path, header()).unwrap();
            assert!(old.is_empty());
            s.scan_resumable(SeriesKind::Psi, Mode::Rigorous, 1000, 100, None, |c| f.append(c))
                .unwrap();
        }
        let (mut f, old) = CheckpointFile::open(&path, header()).unwrap();
        assert_eq!(old.len(), 10);
        let last = *old.last().unwrap();
        let rest = s
            .scan_resumable(SeriesKind::Psi, Mode::Rigorous, 2000, 100, Some(&last), |c| f.append(c))
            .unwrap();
        drop(f);
        let full = s.psi_scan(2000, 100, Mode::Rigorous).unwrap();
        let (_, all) = read(&path).unwrap();
        assert_eq!(all, full.checkpoints);
        assert_eq!(rest.checkpoints.len(), 10);
    }

    #[test]
    fn incompatible_header_is_refused() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.ckpt");
        drop(CheckpointFile::open(&path, header()).unwrap());
        let other = CheckpointHeader { stride: 10, ..header() };
        assert!(matches!(
            CheckpointFile::open(&path, other),
            Err(Error::IncompatibleCheckpoint(_))
        ));
        std::fs::write(&path, "mertens-checkpoint 9\n").unwrap();
        assert!(matches!(read(&path), Err(Error::IncompatibleCheckpoint(_))));
        std::fs::write(&path, "garbage\n").unwrap();
        assert!(matches!(read(&path), Err(Error::Checkpoint(_))));
    }

    #[test]
    fn torn_tail_is_dropped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.ckpt");
        let h = CheckpointHeader {
            kind: SeriesKind::M,
            mode: Mode::Rigorous,
            stride: 10,
        };
        std::fs::write(&path, format!("{}10\t-1\t-1\texact:-1\n20\t-3\t-3\texa", h.render())).unwrap();
        let (mut f, old) = CheckpointFile::open(&path, h).unwrap();
        assert_eq!(old.len(), 1);
        f.append(&Checkpoint {
            x: 20,
            value: crate::summatory::SeriesValue::Exact(-3),
            state: Accumulator::Exact(-3),
        })
        .unwrap();
        drop(f);
        assert_eq!(read(&path).unwrap().1.len(), 2);
    }
}
