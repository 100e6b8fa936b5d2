//! On-disk lattice store keyed by group fingerprint.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};

pub const CACHE_ENV: &str = "GRPX_CACHE";

#[derive(Clone, Debug)]
pub struct LatticeCache {
    dir: PathBuf,
}

/// How a lattice was obtained by [`LatticeCache::load_or_compute`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheSource {
    Hit,
    Computed,
    /// A cache file existed but was rejected and replaced.
    Recomputed,
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `$GRPX_CACHE`, else `$XDG_CACHE_HOME/grpx`, else `~/.cache/grpx`,
    /// else a directory under the system temp dir.
    pub fn from_env() -> Self {
        if let Some(d) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return Self::new(d);
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
            return Self::new(PathBuf::from(d).join("grpx"));
        }
        if let Some(h) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
            return Self::new(PathBuf::from(h).join(".cache").join("grpx"));
        }
        Self::new(std::env::temp_dir().join("grpx-cache"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, g: &FiniteGroup) -> PathBuf {
        self.dir.join(format!("{}.lat", g.fingerprint()))
    }

    pub fn load(&self, g: &Arc<FiniteGroup>) -> Result<Option<SubgroupLattice>> {
        let path = self.path_for(g);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        SubgroupLattice::from_bytes(g.clone(), &bytes).map(Some)
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place so readers never see a partial file.
    pub fn store(&self, lat: &SubgroupLattice) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(lat.group());
        let tmp = self.dir.join(format!(
            ".{}.{}.tmp",
            lat.group().fingerprint(),
            std::process::id()
        ));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&lat.to_bytes())?;
        f.sync_all()?;
        drop(f);
        if let Err(e) = fs::rename(&tmp, &path) {
            let _ = fs::remove_file(&tmp);
            return Err(e.into());
        }
        Ok(path)
    }

    /// Reads the cached lattice; any unreadable, stale or corrupt file is
    /// replaced by a fresh computation. Store failures are ignored.
    pub fn load_or_compute(&self, g: &Arc<FiniteGroup>) -> (SubgroupLattice, CacheSource) {
        let source = match self.load(g) {
            Ok(Some(lat)) => return (lat, CacheSource::Hit),
            Ok(None) => CacheSource::Computed,
            Err(_) => CacheSource::Recomputed,
        };
        let lat = enumerate_subgroups(g);
        let _ = self.store(&lat);
        (lat, source)
    }
}
