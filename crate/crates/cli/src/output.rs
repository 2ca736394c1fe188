use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Output directory that writes each file atomically (temp file + rename).
pub struct OutDir {
    root: PathBuf,
    written: Vec<PathBuf>,
}

impl OutDir {
    pub fn create(root: &Path) -> Result<Self> {
        fs::create_dir_all(root)
            .with_context(|| format!("creating output directory {}", root.display()))?;
        Ok(Self {
            root: root.to_path_buf(),
            written: Vec::new(),
        })
    }

    pub fn write<F>(&mut self, name: &str, fill: F) -> Result<()>
    where
        F: FnOnce(&mut dyn Write) -> Result<()>,
    {
        let target = self.root.join(name);
        let tmp = self.root.join(format!(".{name}.tmp"));
        {
            let file = fs::File::create(&tmp)
                .with_context(|| format!("creating {}", tmp.display()))?;
            let mut w = BufWriter::new(file);
            fill(&mut w).with_context(|| format!("writing {name}"))?;
            w.flush()?;
            w.get_ref().sync_all()?;
        }
        fs::rename(&tmp, &target)
            .with_context(|| format!("renaming {} to {}", tmp.display(), target.display()))?;
        self.written.push(target);
        Ok(())
    }

    /// Serializes `value` as one line of JSON followed by a newline.
    pub fn write_json_line<T: serde::Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        self.write(name, |w| {
            serde_json::to_writer(&mut *w, value)?;
            writeln!(w)?;
            Ok(())
        })
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }
}
