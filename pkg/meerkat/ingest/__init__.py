from .batches import BatchSplit as BatchSplit
from .batches import split_batches as split_batches
from .edge_list import EdgeList as EdgeList
from .edge_list import parse_edge_lines as parse_edge_lines
from .edge_list import parse_edge_list as parse_edge_list
from .experiment import result_checksum as result_checksum
from .experiment import run_experiment as run_experiment
from .experiment_config import CreateExperimentConfig as CreateExperimentConfig
from .experiment_config import ExperimentConfig as ExperimentConfig
from .report import Report as Report
from .report import ReportRow as ReportRow
from .report import write_report as write_report
from .runners import AlgorithmRunner as AlgorithmRunner
from .runners import CreateRunnerFromConfig as CreateRunnerFromConfig
