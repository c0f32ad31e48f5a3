from skew_infra.utils.global_variables.global_variables import GlobalVariables

__all__ = ["GlobalVariables"]
