from .core import Orchestrator, run_trial
from .workflow import WorkflowManager, VERIFY_TARGETS, EXIT_OK, EXIT_VIOLATED, EXIT_INPUT
