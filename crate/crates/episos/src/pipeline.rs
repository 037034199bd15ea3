//! End-to-end pipeline (placeholder).
