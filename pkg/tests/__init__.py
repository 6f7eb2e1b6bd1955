"""Tests for idealforge"""
