from termcode.dsl.parser import SourceSpan, parse, parse_file
from termcode.dsl.renderer import render, render_term, system_digest

__all__ = ["SourceSpan", "parse", "parse_file", "render", "render_term", "system_digest"]
