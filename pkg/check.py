import logging
import sys

from lie_defect.parser import create_arg_dict
from lie_defect.runner import run


if __name__ == "__main__":
    parameters = create_arg_dict()

    # Set up debugging:
    if parameters["debug"]:
        logging.basicConfig(level=logging.DEBUG)

    try:
        exit_code = run(parameters)
    except KeyboardInterrupt:
        print("KeyboardInterrupt - Goodbye!")
        exit_code = 130
    sys.exit(exit_code)
