from .partitions import all_partitions, class_partitions, partition_size, validate_partition, is_very_even
from .diagrams import WeightedDynkinDiagram, h_multiset, diagram_from_partition, classical_literature_diagrams
from .classes import UnipotentClass, ClassCatalog, default_catalog, classical_class, enumerate_classes, find_class, \
    parse_class_label, weighted_dynkin_diagram
from .grading import GradingDims, RadicalStructure, root_weight, root_weights, grading_dims, centralizer_dim_oracle, \
    radical_structure
