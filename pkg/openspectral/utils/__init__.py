from .log import logger, init_logger
from .errors import DimensionMismatchError, HorizonError, ConvergenceError, BudgetExceededError
from .metrics import growth_metrics, slope_stability
from .visualize import result_visualizer
from .serialization import round_sig, dump_json, frame_to_csv
