"""Corpus suites and the end-to-end pipeline."""
from minorhost.tasks.corpus import SUITES, CorpusReport, run_corpus, run_instance, summarize
from minorhost.tasks.pipeline import run_pipeline

__all__ = ["SUITES", "CorpusReport", "run_corpus", "run_instance", "run_pipeline", "summarize"]
