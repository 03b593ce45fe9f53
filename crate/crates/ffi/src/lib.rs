//! C ABI over the spinrep engine.
//!
//! Every function returns a [`SpinrepStatus`] and writes results through out
//! pointers. Handles are opaque and must be released with their `_free`
//! function; strings handed out must be released with `spinrep_string_free`.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use spinrep::groupcore::{self, Group};
use spinrep::spinrep::{spin_character_table, CharacterTable};
use spinrep::verify::{Verifier, CHECKS};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinrepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownGroup = 3,
    UnknownCheck = 4,
    OutOfRange = 5,
    Internal = 6,
}

/// A finite group from the catalog, enumerated.
pub struct SpinrepGroup {
    group: Group,
}

/// The spin character table of R243, entries pre-rendered as text.
pub struct SpinrepCharTable {
    names: Vec<CString>,
    spin: Vec<(u8, u8)>,
    dims: Vec<usize>,
    class_reps: Vec<CString>,
    class_sizes: Vec<usize>,
    cells: Vec<Vec<CString>>,
}

fn guard(f: impl FnOnce() -> SpinrepStatus + UnwindSafe) -> SpinrepStatus {
    catch_unwind(f).unwrap_or(SpinrepStatus::Internal)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SpinrepStatus> {
    if s.is_null() {
        return Err(SpinrepStatus::NullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| SpinrepStatus::InvalidUtf8)
}

fn to_cstring(s: &str) -> CString {
    // rendered values never contain NUL
    CString::new(s).expect("no interior NUL")
}

/// Builds the group `name` ("G27", "G81", "GBAR", "GSHARP", "R243").
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_group_new(
    name: *const c_char,
    out: *mut *mut SpinrepGroup,
) -> SpinrepStatus {
    guard(|| {
        if out.is_null() {
            return SpinrepStatus::NullPointer;
        }
        let name = match read_str(name) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let Ok(schema) = groupcore::schema(name, None) else {
            return SpinrepStatus::UnknownGroup;
        };
        match Group::new(schema) {
            Ok(group) => {
                *out = Box::into_raw(Box::new(SpinrepGroup { group }));
                SpinrepStatus::Ok
            }
            Err(_) => SpinrepStatus::Internal,
        }
    })
}

/// # Safety
/// `g` must come from `spinrep_group_new`; `order` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_group_order(
    g: *const SpinrepGroup,
    order: *mut usize,
) -> SpinrepStatus {
    if g.is_null() || order.is_null() {
        return SpinrepStatus::NullPointer;
    }
    *order = (*g).group.order();
    SpinrepStatus::Ok
}

/// # Safety
/// As for `spinrep_group_order`.
#[no_mangle]
pub unsafe extern "C" fn spinrep_group_class_count(
    g: *const SpinrepGroup,
    count: *mut usize,
) -> SpinrepStatus {
    if g.is_null() || count.is_null() {
        return SpinrepStatus::NullPointer;
    }
    let g = &*g;
    guard(|| {
        *count = g.group.conjugacy_classes().len();
        SpinrepStatus::Ok
    })
}

/// # Safety
/// `g` must come from `spinrep_group_new` or be NULL.
#[no_mangle]
pub unsafe extern "C" fn spinrep_group_free(g: *mut SpinrepGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

fn build_table(t: &CharacterTable) -> SpinrepCharTable {
    let s = groupcore::r243().expect("R243");
    let classes = t.classes.classes();
    SpinrepCharTable {
        names: t.rows.iter().map(|r| to_cstring(&r.name)).collect(),
        spin: t
            .rows
            .iter()
            .map(|r| (r.spin_type.eps, r.spin_type.mu))
            .collect(),
        dims: t.rows.iter().map(|r| r.dim).collect(),
        class_reps: classes
            .iter()
            .map(|c| to_cstring(&s.format_element(&c.rep)))
            .collect(),
        class_sizes: classes.iter().map(|c| c.size()).collect(),
        cells: t
            .rows
            .iter()
            .map(|r| {
                r.character
                    .values()
                    .iter()
                    .map(|v| to_cstring(&v.to_string()))
                    .collect()
            })
            .collect(),
    }
}

/// Computes the 35 x 35 spin character table.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_new(out: *mut *mut SpinrepCharTable) -> SpinrepStatus {
    guard(|| {
        if out.is_null() {
            return SpinrepStatus::NullPointer;
        }
        match spin_character_table() {
            Ok(t) => {
                *out = Box::into_raw(Box::new(build_table(&t)));
                SpinrepStatus::Ok
            }
            Err(_) => SpinrepStatus::Internal,
        }
    })
}

/// # Safety
/// `t` from `spinrep_chartable_new`; `rows` and `cols` writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_shape(
    t: *const SpinrepCharTable,
    rows: *mut usize,
    cols: *mut usize,
) -> SpinrepStatus {
    if t.is_null() || rows.is_null() || cols.is_null() {
        return SpinrepStatus::NullPointer;
    }
    let t = &*t;
    *rows = t.names.len();
    *cols = t.class_reps.len();
    SpinrepStatus::Ok
}

/// Name, spin type and dimension of row `row`. The name is borrowed from
/// the table and lives until `spinrep_chartable_free`.
///
/// # Safety
/// `t` from `spinrep_chartable_new`; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_row(
    t: *const SpinrepCharTable,
    row: usize,
    name: *mut *const c_char,
    eps: *mut u8,
    mu: *mut u8,
    dim: *mut usize,
) -> SpinrepStatus {
    if t.is_null() || name.is_null() || eps.is_null() || mu.is_null() || dim.is_null() {
        return SpinrepStatus::NullPointer;
    }
    let t = &*t;
    if row >= t.names.len() {
        return SpinrepStatus::OutOfRange;
    }
    *name = t.names[row].as_ptr();
    (*eps, *mu) = t.spin[row];
    *dim = t.dims[row];
    SpinrepStatus::Ok
}

/// Representative (borrowed) and size of class `col`.
///
/// # Safety
/// `t` from `spinrep_chartable_new`; the out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_class(
    t: *const SpinrepCharTable,
    col: usize,
    rep: *mut *const c_char,
    size: *mut usize,
) -> SpinrepStatus {
    if t.is_null() || rep.is_null() || size.is_null() {
        return SpinrepStatus::NullPointer;
    }
    let t = &*t;
    if col >= t.class_reps.len() {
        return SpinrepStatus::OutOfRange;
    }
    *rep = t.class_reps[col].as_ptr();
    *size = t.class_sizes[col];
    SpinrepStatus::Ok
}

/// Character value at (`row`, `col`) as an owned string, e.g. "-1-1*w".
/// Release it with `spinrep_string_free`.
///
/// # Safety
/// `t` from `spinrep_chartable_new`; `value` writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_value(
    t: *const SpinrepCharTable,
    row: usize,
    col: usize,
    value: *mut *mut c_char,
) -> SpinrepStatus {
    if t.is_null() || value.is_null() {
        return SpinrepStatus::NullPointer;
    }
    let t = &*t;
    let Some(cell) = t.cells.get(row).and_then(|r| r.get(col)) else {
        return SpinrepStatus::OutOfRange;
    };
    *value = cell.clone().into_raw();
    SpinrepStatus::Ok
}

/// # Safety
/// `t` from `spinrep_chartable_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn spinrep_chartable_free(t: *mut SpinrepCharTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Runs one named check, or all of them when `check` is NULL.
///
/// # Safety
/// `check` NULL or NUL-terminated; `passed` and `failed` writable.
#[no_mangle]
pub unsafe extern "C" fn spinrep_verify(
    check: *const c_char,
    passed: *mut u32,
    failed: *mut u32,
) -> SpinrepStatus {
    guard(|| {
        if passed.is_null() || failed.is_null() {
            return SpinrepStatus::NullPointer;
        }
        let only = if check.is_null() {
            None
        } else {
            match read_str(check) {
                Ok(s) if CHECKS.iter().any(|c| c.name == s) => Some(s),
                Ok(_) => return SpinrepStatus::UnknownCheck,
                Err(e) => return e,
            }
        };
        match Verifier::new().run(only) {
            Ok(results) => {
                let bad = results.iter().filter(|r| !r.passed).count() as u32;
                *failed = bad;
                *passed = results.len() as u32 - bad;
                SpinrepStatus::Ok
            }
            Err(_) => SpinrepStatus::Internal,
        }
    })
}

/// Static description of a status code; never free it.
#[no_mangle]
pub extern "C" fn spinrep_status_message(status: SpinrepStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SpinrepStatus::Ok => c"ok",
        SpinrepStatus::NullPointer => c"null pointer argument",
        SpinrepStatus::InvalidUtf8 => c"string argument is not UTF-8",
        SpinrepStatus::UnknownGroup => c"unknown group name",
        SpinrepStatus::UnknownCheck => c"unknown check name",
        SpinrepStatus::OutOfRange => c"index out of range",
        SpinrepStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn spinrep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
