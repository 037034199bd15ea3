//! Exact certificates (placeholder).
