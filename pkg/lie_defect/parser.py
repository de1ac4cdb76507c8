import argparse

COMMANDS = ("classes", "identities", "verify")
FORMATS = ("text", "json", "csv")


def create_parser():
    parser = argparse.ArgumentParser(prog="check.py",
                                     description="Exact checks of the defect identity for finite groups of Lie "
                                                 "type in good characteristic.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("targets", nargs="*", help="group specs (C2, GL3), a family with a rank range (A 1..8) "
                                                   "or 'table <path>'")
    # Data:
    parser.add_argument("--table", help="character table file, implies table mode for verify", default="")
    parser.add_argument("--diagrams", action="append", default=[],
                        help="JSON file of exceptional weighted Dynkin diagrams, may be repeated")
    # Verification:
    parser.add_argument("--numeric", nargs=2, metavar=("p=P", "k=K"), default=None,
                        help="also evaluate both sides at q = p^k")
    parser.add_argument("--rank-cap", type=int, default=0, help="largest accepted rank for classical types, "
                                                                "0 keeps the defaults")
    # User experience:
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--tqdm", type=int, help="show progress bars", default=0)
    parser.add_argument("--verbose", help="increase output verbosity", action="store_true", default=False)
    parser.add_argument("--debug", action="store_true", default=False)
    return parser


def create_arg_dict(argv=None):
    # Options may appear between the verb and its targets:
    parser = create_parser()
    args = parser.parse_intermixed_args(argv)
    return vars(args)
