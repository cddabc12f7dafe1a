""" """

from .action_enums import ActionMsg
from .matroid_enums import MatroidMsg
from .tutte_enums import TutteMsg
from .topology_enums import TopologyMsg
from .classify_enums import ClassifyMsg
from .cli_enums import CliMsg
