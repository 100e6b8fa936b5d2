use std::fs;
use std::sync::Arc;
use std::time::Instant;

use grpx::cache::{CacheSource, LatticeCache};
use grpx::dsl::build_str;
use grpx::group::FiniteGroup;
use grpx::lattice::{enumerate_subgroups, SubgroupLattice, CACHE_VERSION};
use grpx::Error;

fn group(s: &str) -> Arc<FiniteGroup> {
    Arc::new(build_str(s).unwrap().group)
}

#[test]
fn round_trip_is_bit_exact() {
    for s in ["C(1)", "Q8", "SL23", "G42_1", "SG81_10"] {
        let g = group(s);
        let lat = enumerate_subgroups(&g);
        let back = SubgroupLattice::from_bytes(g.clone(), &lat.to_bytes()).unwrap();
        assert!(back.same_as(&lat), "{s}");
        assert_eq!(back.to_bytes(), lat.to_bytes());
        for a in lat.indices() {
            assert_eq!(back.upper_covers(a), lat.upper_covers(a));
            assert_eq!(back.is_normal(a), lat.is_normal(a));
            for b in lat.indices() {
                assert_eq!(back.join(a, b), lat.join(a, b));
                assert_eq!(back.meet(a, b), lat.meet(a, b));
            }
        }
    }
}

#[test]
fn rejects_foreign_and_damaged_data() {
    let (g, h) = (group("C9xC3"), group("ES27"));
    let bytes = enumerate_subgroups(&g).to_bytes();
    assert!(matches!(SubgroupLattice::from_bytes(h, &bytes), Err(Error::CorruptCache(_))));
    for cut in [0, 7, 20, bytes.len() / 2, bytes.len() - 1] {
        assert!(SubgroupLattice::from_bytes(g.clone(), &bytes[..cut]).is_err(), "cut at {cut}");
    }
    let mut flipped = bytes.clone();
    flipped[bytes.len() / 2] ^= 0x10;
    assert!(matches!(SubgroupLattice::from_bytes(g.clone(), &flipped), Err(Error::CorruptCache(_))));
    let mut old = bytes.clone();
    old[8..12].copy_from_slice(&(CACHE_VERSION + 1).to_le_bytes());
    assert_eq!(
        SubgroupLattice::from_bytes(g, &old).unwrap_err(),
        Error::CacheVersionMismatch { found: CACHE_VERSION + 1, expected: CACHE_VERSION }
    );
}

#[test]
fn store_load_and_silent_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let cache = LatticeCache::new(dir.path().join("nested"));
    let g = group("SL23");
    let (first, src) = cache.load_or_compute(&g);
    assert_eq!(src, CacheSource::Computed);
    let path = cache.path_for(&g);
    assert!(path.exists());
    let (second, src) = cache.load_or_compute(&g);
    assert_eq!(src, CacheSource::Hit);
    assert!(second.same_as(&first));

    // tampered file: rejected by load, replaced by load_or_compute
    let mut bytes = fs::read(&path).unwrap();
    let mid = bytes.len() / 3;
    bytes[mid] = bytes[mid].wrapping_add(1);
    fs::write(&path, &bytes).unwrap();
    assert!(cache.load(&g).is_err());
    let (third, src) = cache.load_or_compute(&g);
    assert_eq!(src, CacheSource::Recomputed);
    assert!(third.same_as(&first));
    assert_eq!(cache.load_or_compute(&g).1, CacheSource::Hit);

    // stale version
    let mut bytes = fs::read(&path).unwrap();
    bytes[8..12].copy_from_slice(&0u32.to_le_bytes());
    fs::write(&path, &bytes).unwrap();
    assert!(matches!(cache.load(&g), Err(Error::CacheVersionMismatch { found: 0, .. })));
    assert_eq!(cache.load_or_compute(&g).1, CacheSource::Recomputed);

    // no stray temporary files
    let names: Vec<_> = fs::read_dir(cache.dir()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 1, "{names:?}");
}

#[test]
fn unwritable_cache_still_computes() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, b"not a directory").unwrap();
    let cache = LatticeCache::new(blocker.join("sub"));
    let g = group("Q8");
    let (lat, src) = cache.load_or_compute(&g);
    assert_ne!(src, CacheSource::Hit);
    assert_eq!(lat.len(), 6);
    assert!(cache.store(&lat).is_err());
}

#[test]
fn reload_of_order_3125_is_ten_times_faster() {
    let dir = tempfile::tempdir().unwrap();
    let cache = LatticeCache::new(dir.path());
    let g = group("BLACKBURN5");
    let t = Instant::now();
    let computed = enumerate_subgroups(&g);
    let compute = t.elapsed();
    cache.store(&computed).unwrap();
    let mut best = None;
    for _ in 0..3 {
        let t = Instant::now();
        let loaded = cache.load(&g).unwrap().unwrap();
        let e = t.elapsed();
        assert!(loaded.same_as(&computed));
        best = Some(best.map_or(e, |b: std::time::Duration| b.min(e)));
    }
    let load = best.unwrap();
    assert!(
        load * 10 <= compute,
        "load {load:?} vs compute {compute:?}"
    );
}
