__app_name__ = "cwkit"
__version__ = "0.0.0"
__release_date__ = "unknown"
__copyright_year__ = "unknown"
__author__ = "The cwkit Authors"
__url__ = ""
