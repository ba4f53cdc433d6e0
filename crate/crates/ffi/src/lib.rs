//! C ABI over `clutter-complexity`.
//!
//! Graphs and clutters are opaque handles created by the `cc_*_from_*`
//! constructors and released with the matching `cc_*_free`. Every fallible
//! call returns a [`CcStatus`]; on failure `cc_last_error_message` describes
//! the error on the calling thread. Strings returned through `char **`
//! belong to the caller and are released with `cc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clutter_complexity::complexity::{clutter_complexity, graph_complexity_with, matching_complexity_with};
use clutter_complexity::enumerate::maximal_independent_sets_with;
use clutter_complexity::graph::{encode_graph6, parse_graph6};
use clutter_complexity::limits::Limits;
use clutter_complexity::tree::construct_full_complexity_mis;
use clutter_complexity::verification::{check_bound, check_clutter_bound, full_report, BoundKind};
use clutter_complexity::{Clutter, Error, Graph, Rational, VertexSet};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    LimitExceeded = 4,
    Precondition = 5,
    CertificateFailure = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct CcGraph(Graph);

/// Opaque clutter handle.
pub struct CcClutter(Clutter);

/// Exact value `numer / denom`, always reduced.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CcRational {
    pub numer: u64,
    pub denom: u64,
}

impl From<Rational> for CcRational {
    fn from(r: Rational) -> Self {
        CcRational { numer: r.numer(), denom: r.denom() }
    }
}

/// Outcome of one bound check. `holds` and `tight` are 1, 0, or -1 when
/// undefined (inapplicable input or no left-hand side).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CcBoundResult {
    pub applicable: bool,
    pub has_lhs: bool,
    pub lhs: CcRational,
    pub holds: i32,
    pub tight: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CcStatus {
    match e {
        Error::Graph6 { .. } | Error::Parse { .. } => CcStatus::ParseError,
        Error::VertexCap { .. }
        | Error::Graph6Size { .. }
        | Error::EnumerationCap { .. }
        | Error::TooLarge(_)
        | Error::TimeLimit => CcStatus::LimitExceeded,
        Error::NotATree(_) | Error::NotALeaf(_) | Error::Precondition(_) => CcStatus::Precondition,
        Error::CertificateFailure(_) => CcStatus::CertificateFailure,
        Error::Stage { source, .. } => status_of(source),
        _ => CcStatus::InvalidArgument,
    }
}

struct Fail(CcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status plus the thread's last
/// error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            CcStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(CcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn graph_arg<'a>(p: *const CcGraph) -> Result<&'a Graph, Fail> {
    p.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn clutter_arg<'a>(p: *const CcClutter) -> Result<&'a Clutter, Fail> {
    p.as_ref().map(|l| &l.0).ok_or_else(|| null("clutter"))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(CcStatus::InvalidArgument, "string contains a nul byte".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_vertices(set: VertexSet, out: *mut usize, capacity: usize, len: *mut usize) -> Result<(), Fail> {
    put(len, set.len())?;
    if set.len() > capacity {
        return Err(Fail(CcStatus::BufferTooSmall, format!("{} vertices do not fit in {capacity}", set.len())));
    }
    if set.is_empty() {
        return Ok(());
    }
    if out.is_null() {
        return Err(null("vertex buffer"));
    }
    for (i, v) in set.iter().enumerate() {
        out.add(i).write(v);
    }
    Ok(())
}

/// Message for the last failed call on this thread, or NULL after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn cc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `code` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_from_graph6(code: *const c_char, out: *mut *mut CcGraph) -> CcStatus {
    guard(|| {
        let g = parse_graph6(str_arg(code, "graph6 string")?.trim())?;
        put(out, Box::into_raw(Box::new(CcGraph(g))))
    })
}

/// Graph on `n` vertices with `m` edges given as `2 * m` endpoints.
///
/// # Safety
/// `endpoints` must hold `2 * m` values (it may be NULL when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn cc_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut CcGraph,
) -> CcStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Graph::from_edges(n, &edges)?;
        put(out, Box::into_raw(Box::new(CcGraph(g))))
    })
}

/// # Safety
/// `g` must come from a constructor of this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_free(g: *mut CcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `g` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_vertex_count(g: *const CcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `g` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_edge_count(g: *const CcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_to_graph6(g: *const CcGraph, out: *mut *mut c_char) -> CcStatus {
    guard(|| put_string(out, encode_graph6(graph_arg(g)?)?))
}

/// Complexity of the clutter of maximal independent sets.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_complexity(g: *const CcGraph, out: *mut CcRational) -> CcStatus {
    guard(|| {
        let r = graph_complexity_with(graph_arg(g)?, &Limits::default())?;
        put(out, r.c.into())
    })
}

/// Complexity of the clutter of maximal matchings; fails on edgeless graphs.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_matching_complexity(g: *const CcGraph, out: *mut CcRational) -> CcStatus {
    guard(|| {
        let (r, _) = matching_complexity_with(graph_arg(g)?, &Limits::default())?;
        put(out, r.c.into())
    })
}

/// Clutter from text: the ground-set size, then one edge per line as vertex indices.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_clutter_from_text(text: *const c_char, out: *mut *mut CcClutter) -> CcStatus {
    guard(|| {
        let l = Clutter::parse_text(str_arg(text, "clutter text")?)?;
        put(out, Box::into_raw(Box::new(CcClutter(l))))
    })
}

/// The clutter of maximal independent sets of `g`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_graph_independent_sets(g: *const CcGraph, out: *mut *mut CcClutter) -> CcStatus {
    guard(|| {
        let l = maximal_independent_sets_with(graph_arg(g)?, &Limits::default())?;
        put(out, Box::into_raw(Box::new(CcClutter(l))))
    })
}

/// # Safety
/// `l` must come from a constructor of this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_clutter_free(l: *mut CcClutter) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Number of edges, 0 for NULL.
///
/// # Safety
/// `l` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn cc_clutter_edge_count(l: *const CcClutter) -> usize {
    l.as_ref().map_or(0, |l| l.0.len())
}

/// Copies edge `index` into `out` (capacity `capacity`); `len` receives the
/// edge size even when the buffer is too small.
///
/// # Safety
/// `l` must be a live handle; `out` must hold `capacity` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_clutter_edge(
    l: *const CcClutter,
    index: usize,
    out: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> CcStatus {
    guard(|| put_vertices(clutter_arg(l)?.edge(index)?, out, capacity, len))
}

/// # Safety
/// `l` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_clutter_complexity(l: *const CcClutter, out: *mut CcRational) -> CcStatus {
    guard(|| {
        let r = clutter_complexity(clutter_arg(l)?)?;
        put(out, r.c.into())
    })
}

fn bound_result(r: clutter_complexity::verification::BoundReport) -> CcBoundResult {
    let tri = |b: Option<bool>| b.map_or(-1, i32::from);
    CcBoundResult {
        applicable: r.applicable,
        has_lhs: r.lhs.is_some(),
        lhs: r.lhs.map(CcRational::from).unwrap_or_default(),
        holds: tri(r.holds),
        tight: tri(r.tight),
    }
}

unsafe fn bound_kind(kind: *const c_char) -> Result<BoundKind, Fail> {
    str_arg(kind, "bound kind")?.parse().map_err(|e| Fail(CcStatus::InvalidArgument, e))
}

/// Checks one bound (`"gallai"`, `"degree"`, `"main"`, `"matching_lower"`,
/// `"regular_half"`, `"regular_two_thirds"`, `"regular_four"`, `"addendum"`).
///
/// # Safety
/// `g` must be a live handle, `kind` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cc_check_bound(g: *const CcGraph, kind: *const c_char, out: *mut CcBoundResult) -> CcStatus {
    guard(|| {
        let r = check_bound(graph_arg(g)?, bound_kind(kind)?, &Limits::default())?;
        put(out, bound_result(r))
    })
}

/// Bound check on a clutter; only `"addendum"` can be applicable.
///
/// # Safety
/// `l` must be a live handle, `kind` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cc_check_clutter_bound(
    l: *const CcClutter,
    kind: *const c_char,
    out: *mut CcBoundResult,
) -> CcStatus {
    guard(|| {
        let r = check_clutter_bound(clutter_arg(l)?, bound_kind(kind)?)?;
        put(out, bound_result(r))
    })
}

/// Maximal independent set of complexity one containing `leaf`, for trees
/// with no beta and no pure delta vertex. `len` receives the set size.
///
/// # Safety
/// `g` must be a live handle; `out` must hold `capacity` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_construct_tree_mis(
    g: *const CcGraph,
    leaf: usize,
    out: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> CcStatus {
    guard(|| {
        let (u, _) = construct_full_complexity_mis(graph_arg(g)?, leaf)?;
        put_vertices(u, out, capacity, len)
    })
}

/// Full JSON report: statistics, both complexities, bounds and lemmas.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cc_full_report_json(g: *const CcGraph, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let r = full_report(graph_arg(g)?, &Limits::default())?;
        let json = serde_json::to_string(&r).map_err(|e| Fail(CcStatus::InvalidArgument, e.to_string()))?;
        put_string(out, json)
    })
}
