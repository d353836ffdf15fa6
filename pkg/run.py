"""
Application Entry Point
Modified Albertson index toolkit
Equivalent to the ``irregularity`` console script, for use from a checkout
"""
from irregularity.views import main


if __name__ == "__main__":
    main()
