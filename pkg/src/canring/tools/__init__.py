"""Tool implementations behind the CLI commands."""

from .bounds import BoundsTool, VerifyTool
from .common import ToolOutput
from .geometry import BasisTool, ConeTool
from .presentation import ConvergentsTool, PresentationTool

__all__ = [
    "BasisTool",
    "BoundsTool",
    "ConeTool",
    "ConvergentsTool",
    "PresentationTool",
    "ToolOutput",
    "VerifyTool",
]
